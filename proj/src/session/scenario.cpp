#include "qlps/session/scenario.hpp"

#include <fstream>

namespace qlps {

std::vector<ScenarioEvent> scenario_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw ConfigError("scenario", "must be a JSON array");
    std::vector<ScenarioEvent> events;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string where = "scenario[" + std::to_string(i) + "]";
        const auto& e = doc[i];
        if (!e.is_object()) throw ConfigError(where, "must be an object");
        for (const auto& item : e.items())
            if (item.key() != "frame" && item.key() != "action" && item.key() != "ax" && item.key() != "ay")
                throw ConfigError(where + "." + item.key(), "unknown key");
        if (!e.contains("frame") || !e.at("frame").is_number_unsigned())
            throw ConfigError(where + ".frame", "must be a non-negative integer");
        if (!e.contains("action") || !e.at("action").is_string())
            throw ConfigError(where + ".action", "must be a string");

        ScenarioEvent ev;
        ev.frame = e.at("frame").get<std::uint64_t>();
        const auto action = e.at("action").get<std::string>();
        if (action == "click") {
            ev.action = EventAction::click;
            for (const char* key : {"ax", "ay"})
                if (!e.contains(key) || !e.at(key).is_number_integer())
                    throw ConfigError(where + "." + key, "click needs an integer cell coordinate");
            ev.cell = {e.at("ax").get<int>(), e.at("ay").get<int>()};
        } else if (action == "pause") {
            ev.action = EventAction::pause;
        } else if (action == "resume") {
            ev.action = EventAction::resume;
        } else if (action == "reset") {
            ev.action = EventAction::reset;
        } else {
            throw ConfigError(where + ".action", "unknown action '" + action + "'");
        }
        if (!events.empty() && ev.frame < events.back().frame)
            throw ConfigError(where + ".frame", "events must be sorted by frame");
        events.push_back(ev);
    }
    return events;
}

std::vector<ScenarioEvent> load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("scenario", "cannot open '" + path.string() + "'");
    try {
        return scenario_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("scenario", std::string("invalid JSON: ") + e.what());
    }
}

std::vector<FrameRecord> run_scenario(Session& session, const std::vector<ScenarioEvent>& events,
                                      std::uint64_t frames, const FrameSink& sink) {
    for (const auto& ev : events)
        if (ev.action == EventAction::click && !in_bounds(ev.cell, session.grid()))
            throw ConfigError("scenario", "click at frame " + std::to_string(ev.frame) + " is outside the grid");

    std::vector<FrameRecord> records;
    records.reserve(static_cast<std::size_t>(frames));
    auto next = events.begin();
    for (std::uint64_t f = 0; f < frames; ++f) {
        FrameRecord rec;
        rec.frame = f;
        for (; next != events.end() && next->frame == f; ++next) {
            switch (next->action) {
            case EventAction::click: rec.outcomes.push_back(session.handle_click(next->cell)); break;
            case EventAction::pause: session.pause(); break;
            case EventAction::resume: session.resume(); break;
            case EventAction::reset: session.reset(); break;
            }
        }
        FrameResult result;
        if (session.status() == SessionStatus::running) {
            result = session.advance_frame();
        } else {
            result = session.observe();
            rec.advanced = false;
        }
        rec.stats = std::move(result.stats);
        if (sink) sink(rec, result.marginals);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<FrameRecord> run_scenario(const SessionConfig& config, const std::vector<ScenarioEvent>& events,
                                      std::uint64_t frames, const FrameSink& sink) {
    Session session(config);
    return run_scenario(session, events, frames, sink);
}

} // namespace qlps
