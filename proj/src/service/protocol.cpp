#include "qlps/service/protocol.hpp"

namespace qlps::wire {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json stats_to_json(const FrameStats& s) {
    json out = {{"pre_norm", s.pre_norm}, {"total_energy", s.total_energy}, {"cm_x", s.cm.x}, {"cm_y", s.cm.y}};
    for (std::size_t k = 0; k < s.kinetic.size(); ++k) {
        const auto idx = std::to_string(k);
        out["kin_" + idx] = s.kinetic[k];
        out["ex_" + idx] = s.expected_pos[k].x;
        out["ey_" + idx] = s.expected_pos[k].y;
    }
    return out;
}

FrameStats stats_from_json(const json& j, double t, std::size_t n) {
    FrameStats s;
    s.t = t;
    s.pre_norm = j.at("pre_norm").get<double>();
    s.total_energy = j.at("total_energy").get<double>();
    s.cm = {j.at("cm_x").get<double>(), j.at("cm_y").get<double>()};
    for (std::size_t k = 0; k < n; ++k) {
        const auto idx = std::to_string(k);
        s.kinetic.push_back(j.at("kin_" + idx).get<double>());
        s.expected_pos.push_back({j.at("ex_" + idx).get<double>(), j.at("ey_" + idx).get<double>()});
    }
    return s;
}

int get_int(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ProtocolError("bad_message", std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

std::string type_name(const Message& msg) {
    return std::visit(overloaded{[](const Init&) { return "init"; },
                                 [](const Ready&) { return "ready"; },
                                 [](const Frame&) { return "frame"; },
                                 [](const Click&) { return "click"; },
                                 [](const Measurement&) { return "measurement"; },
                                 [](const Pause&) { return "pause"; },
                                 [](const Resume&) { return "resume"; },
                                 [](const Reset&) { return "reset"; },
                                 [](const SetSpeed&) { return "set_speed"; },
                                 [](const ErrorMsg&) { return "error"; }},
                      msg);
}

json to_json(const Message& msg) {
    json out = std::visit(
        overloaded{
            [](const Init& m) {
                json j = json::object();
                if (m.config) j["config"] = *m.config;
                return j;
            },
            [](const Ready& m) {
                json parts = json::array();
                for (const auto& p : m.particles)
                    parts.push_back({{"mass", p.mass}, {"spring_k", p.spring_k}, {"channel", std::string(to_string(p.display_channel))}});
                return json{{"grid", {{"m", m.grid.m}, {"n", m.grid.n}, {"dx", m.grid.dx}, {"dy", m.grid.dy}}},
                            {"particles", parts},
                            {"dt", m.dt},
                            {"steps_per_frame", m.steps_per_frame}};
            },
            [](const Frame& m) {
                return json{{"seq", m.seq}, {"t", m.t}, {"stats", stats_to_json(m.stats)}, {"marginals", m.marginals}};
            },
            [](const Click& m) { return json{{"ax", m.ax}, {"ay", m.ay}}; },
            [](const Measurement& m) {
                json detected = nullptr;
                if (m.outcome.detected) detected = *m.outcome.detected;
                return json{{"cell", {{"ax", m.outcome.cell.ax}, {"ay", m.outcome.cell.ay}}},
                            {"probs", m.outcome.probs},
                            {"detected", detected}};
            },
            [](const Pause&) { return json::object(); },
            [](const Resume&) { return json::object(); },
            [](const Reset&) { return json::object(); },
            [](const SetSpeed& m) { return json{{"steps_per_frame", m.steps_per_frame}}; },
            [](const ErrorMsg& m) { return json{{"code", m.code}, {"message", m.message}}; }},
        msg);
    out["type"] = type_name(msg);
    return out;
}

std::string encode(const Message& msg) { return to_json(msg).dump(); }

Message from_json(const json& j) {
    if (!j.is_object()) throw ProtocolError("bad_message", "message must be a JSON object");
    if (!j.contains("type") || !j.at("type").is_string()) throw ProtocolError("bad_message", "missing string field 'type'");
    const auto type = j.at("type").get<std::string>();
    try {
        if (type == "init") {
            Init m;
            if (j.contains("config")) m.config = j.at("config");
            return m;
        }
        if (type == "ready") {
            Ready m;
            const auto& g = j.at("grid");
            m.grid = {g.at("m").get<int>(), g.at("n").get<int>(), g.at("dx").get<double>(), g.at("dy").get<double>()};
            for (const auto& p : j.at("particles"))
                m.particles.push_back({p.at("mass").get<double>(), p.at("spring_k").get<double>(),
                                       channel_from_string(p.at("channel").get<std::string>())});
            m.dt = j.at("dt").get<double>();
            m.steps_per_frame = get_int(j, "steps_per_frame");
            return m;
        }
        if (type == "frame") {
            Frame m;
            m.seq = j.at("seq").get<std::uint64_t>();
            m.t = j.at("t").get<double>();
            m.marginals = j.at("marginals").get<std::vector<std::vector<double>>>();
            m.stats = stats_from_json(j.at("stats"), m.t, m.marginals.size());
            return m;
        }
        if (type == "click") return Click{get_int(j, "ax"), get_int(j, "ay")};
        if (type == "measurement") {
            Measurement m;
            const auto& c = j.at("cell");
            m.outcome.cell = {get_int(c, "ax"), get_int(c, "ay")};
            m.outcome.probs = j.at("probs").get<std::vector<double>>();
            if (!j.at("detected").is_null()) m.outcome.detected = j.at("detected").get<std::size_t>();
            return m;
        }
        if (type == "pause") return Pause{};
        if (type == "resume") return Resume{};
        if (type == "reset") return Reset{};
        if (type == "set_speed") return SetSpeed{get_int(j, "steps_per_frame")};
        if (type == "error") return ErrorMsg{j.at("code").get<std::string>(), j.at("message").get<std::string>()};
    } catch (const ProtocolError&) {
        throw;
    } catch (const std::exception& e) {
        throw ProtocolError("bad_message", "malformed '" + type + "' message: " + e.what());
    }
    throw ProtocolError("unknown_type", "unknown message type '" + type + "'");
}

Message decode(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ProtocolError("bad_message", std::string("invalid JSON: ") + e.what());
    }
    return from_json(j);
}

Frame encode_frame(std::uint64_t seq, const FrameStats& stats, const std::vector<Marginal2D>& marginals) {
    Frame f;
    f.seq = seq;
    f.t = stats.t;
    f.stats = stats;
    for (const auto& m : marginals) {
        if (!marginals.empty() && !(m.grid == marginals.front().grid))
            throw InvalidArgument("marginals do not share a grid");
        f.marginals.push_back(m.values);
    }
    return f;
}

Ready make_ready(const Session& session) {
    return Ready{session.grid(), session.model().particles, session.dt(), session.steps_per_frame()};
}

} // namespace qlps::wire
