#pragma once

// JSON messages exchanged over the WebSocket, one object per text frame.
//
// client -> server: init, click, pause, resume, reset, set_speed
// server -> client: ready, frame, measurement, error

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlps/error.hpp"
#include "qlps/measurement.hpp"
#include "qlps/model.hpp"
#include "qlps/observables.hpp"
#include "qlps/session/session.hpp"

namespace qlps::wire {

struct Init {
    std::optional<nlohmann::json> config;  // server default when absent
    bool operator==(const Init&) const = default;
};

struct Ready {
    GridSpec grid;
    std::vector<ParticleSpec> particles;
    double dt = 0.0;
    int steps_per_frame = 1;
    bool operator==(const Ready&) const = default;
};

struct Frame {
    std::uint64_t seq = 0;
    double t = 0.0;
    FrameStats stats;
    std::vector<std::vector<double>> marginals;  // per particle, m*n values, ay outer / ax inner
    bool operator==(const Frame&) const = default;
};

struct Click {
    int ax = 0;
    int ay = 0;
    bool operator==(const Click&) const = default;
};

struct Measurement {
    MeasurementOutcome outcome;
    bool operator==(const Measurement&) const = default;
};

struct Pause {
    bool operator==(const Pause&) const = default;
};
struct Resume {
    bool operator==(const Resume&) const = default;
};
struct Reset {
    bool operator==(const Reset&) const = default;
};

struct SetSpeed {
    int steps_per_frame = 1;
    bool operator==(const SetSpeed&) const = default;
};

struct ErrorMsg {
    std::string code;
    std::string message;
    bool operator==(const ErrorMsg&) const = default;
};

using Message = std::variant<Init, Ready, Frame, Click, Measurement, Pause, Resume, Reset, SetSpeed, ErrorMsg>;

/// Decoding failure. code() is the value sent back in the error reply.
class ProtocolError : public Error {
public:
    ProtocolError(std::string code, const std::string& message) : Error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

nlohmann::json to_json(const Message& msg);
std::string encode(const Message& msg);

/// Throws ProtocolError: "bad_message" for malformed JSON or fields, "unknown_type" otherwise.
Message decode(const std::string& text);
Message from_json(const nlohmann::json& doc);

std::string type_name(const Message& msg);

Frame encode_frame(std::uint64_t seq, const FrameStats& stats, const std::vector<Marginal2D>& marginals);
Ready make_ready(const Session& session);

} // namespace qlps::wire
