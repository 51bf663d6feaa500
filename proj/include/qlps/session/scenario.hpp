#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlps/session/session.hpp"

namespace qlps {

enum class EventAction { click, pause, resume, reset };

/// An action applied at the start of scenario frame `frame`, before that frame is stepped.
struct ScenarioEvent {
    std::uint64_t frame = 0;
    EventAction action = EventAction::click;
    Cell cell;  // click only

    bool operator==(const ScenarioEvent&) const = default;
};

/// Parses `[{"frame": 3, "action": "click", "ax": 1, "ay": 2}, ...]`.
/// Events must be sorted by frame. Throws ConfigError.
std::vector<ScenarioEvent> scenario_from_json(const nlohmann::json& doc);
std::vector<ScenarioEvent> load_scenario_file(const std::filesystem::path& path);

struct FrameRecord {
    std::uint64_t frame = 0;
    FrameStats stats;
    std::vector<MeasurementOutcome> outcomes;  // clicks applied at the start of this frame
    bool advanced = true;                       // false when the session was paused

    bool operator==(const FrameRecord&) const = default;
};

using FrameSink = std::function<void(const FrameRecord&, const std::vector<Marginal2D>&)>;

/// Runs `frames` frames of a fresh session, applying events at frame boundaries.
/// Paused frames produce a record of the unchanged state. The sink, if any, sees
/// every record together with its marginals.
std::vector<FrameRecord> run_scenario(const SessionConfig& config, const std::vector<ScenarioEvent>& events,
                                      std::uint64_t frames, const FrameSink& sink = {});

/// Same, continuing an existing session.
std::vector<FrameRecord> run_scenario(Session& session, const std::vector<ScenarioEvent>& events,
                                      std::uint64_t frames, const FrameSink& sink = {});

} // namespace qlps
