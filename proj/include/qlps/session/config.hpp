#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlps/error.hpp"
#include "qlps/grid.hpp"
#include "qlps/initial_state.hpp"
#include "qlps/model.hpp"

namespace qlps {

struct SimConfig {
    std::optional<double> dt;  // chosen by choose_dt(dt_safety) when absent
    double dt_safety = 0.1;
    int steps_per_frame = 1;
    std::uint64_t seed = 0;

    bool operator==(const SimConfig&) const = default;
};

/// Everything needed to build a session.
struct SessionConfig {
    GridSpec grid;
    ModelParams model;
    SimConfig sim;
    std::vector<GaussianSpec> initial;

    /// Checks every type invariant; throws ConfigError naming the field.
    void validate() const;

    bool operator==(const SessionConfig&) const = default;
};

/// Invalid or unreadable configuration. field() is a dotted path like "grid.m".
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Parses the config document. Unknown keys are rejected.
SessionConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const SessionConfig& cfg);

/// Serialized with sorted keys and no whitespace.
std::string canonical_json(const SessionConfig& cfg);

SessionConfig load_config_file(const std::filesystem::path& path);

} // namespace qlps
