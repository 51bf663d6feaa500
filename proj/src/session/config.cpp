#include "qlps/session/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qlps {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : obj.items())
        if (!keys.contains(item.key()))
            throw ConfigError(where.empty() ? item.key() : where + "." + item.key(), "unknown key");
}

const json& require_object(const json& parent, const char* key, const std::string& where) {
    const std::string field = where.empty() ? key : where + "." + key;
    if (!parent.contains(key)) throw ConfigError(field, "missing");
    const json& v = parent.at(key);
    if (!v.is_object()) throw ConfigError(field, "must be an object");
    return v;
}

double number(const json& parent, const char* key, const std::string& where, std::optional<double> fallback) {
    const std::string field = where + "." + key;
    if (!parent.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(field, "missing");
    }
    const json& v = parent.at(key);
    if (!v.is_number()) throw ConfigError(field, "must be a number");
    return v.get<double>();
}

int integer(const json& parent, const char* key, const std::string& where, std::optional<int> fallback) {
    const std::string field = where + "." + key;
    if (!parent.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(field, "missing");
    }
    const json& v = parent.at(key);
    if (!v.is_number_integer()) throw ConfigError(field, "must be an integer");
    return v.get<int>();
}

Point2 point(const json& parent, const char* key, const std::string& where, std::optional<Point2> fallback) {
    const std::string field = where + "." + key;
    if (!parent.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(field, "missing");
    }
    const json& v = parent.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError(field, "must be a [x, y] pair of numbers");
    return {v[0].get<double>(), v[1].get<double>()};
}

Channel default_channel(std::size_t i) {
    switch (i) {
    case 0: return Channel::red;
    case 1: return Channel::green;
    case 2: return Channel::blue;
    default: return Channel::none;
    }
}

// Runs a validator and rewraps InvalidArgument as a ConfigError. Core messages
// start with the offending path ("grid.m must be ..."); when that path lies under
// `field` it becomes the reported field.
template <typename F>
void check(const std::string& field, F&& f) {
    try {
        f();
    } catch (const InvalidArgument& e) {
        const std::string msg = e.what();
        const std::string head = msg.substr(0, msg.find_first_of(" :"));
        if (head.size() > field.size() && head.compare(0, field.size(), field) == 0 &&
            (head[field.size()] == '.' || head[field.size()] == '['))
            throw ConfigError(head, msg.substr(std::min(msg.size(), head.size() + 1)));
        throw ConfigError(field, msg);
    }
}

} // namespace

void SessionConfig::validate() const {
    check("grid", [&] { grid.validate(); });
    check("model", [&] { model.validate(); });
    if (sim.dt && (!(*sim.dt > 0.0) || !std::isfinite(*sim.dt))) throw ConfigError("sim.dt", "must be positive");
    if (!(sim.dt_safety > 0.0 && sim.dt_safety <= 1.0)) throw ConfigError("sim.dt_safety", "must lie in (0, 1]");
    if (sim.steps_per_frame < 1) throw ConfigError("sim.steps_per_frame", "must be >= 1");
    if (initial.size() != model.size())
        throw ConfigError("initial", "needs exactly one entry per particle (" + std::to_string(model.size()) + ")");
    for (std::size_t i = 0; i < initial.size(); ++i)
        if (!(initial[i].width > 0.0) || !std::isfinite(initial[i].width))
            throw ConfigError("initial[" + std::to_string(i) + "].width", "must be positive");
}

SessionConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config", "must be a JSON object");
    reject_unknown(doc, "", {"grid", "model", "sim", "initial"});
    SessionConfig cfg;

    const json& g = require_object(doc, "grid", "");
    reject_unknown(g, "grid", {"m", "n", "dx", "dy"});
    cfg.grid.m = integer(g, "m", "grid", std::nullopt);
    cfg.grid.n = integer(g, "n", "grid", std::nullopt);
    cfg.grid.dx = number(g, "dx", "grid", 1.0);
    cfg.grid.dy = number(g, "dy", "grid", 1.0);

    const json& mdl = require_object(doc, "model", "");
    reject_unknown(mdl, "model", {"hbar", "potential_mode", "particles"});
    cfg.model.hbar = number(mdl, "hbar", "model", 1.0);
    if (mdl.contains("potential_mode")) {
        const json& pm = mdl.at("potential_mode");
        if (!pm.is_string()) throw ConfigError("model.potential_mode", "must be a string");
        check("model.potential_mode", [&] { cfg.model.potential_mode = potential_mode_from_string(pm.get<std::string>()); });
    }
    if (!mdl.contains("particles") || !mdl.at("particles").is_array())
        throw ConfigError("model.particles", "must be an array");
    const json& parts = mdl.at("particles");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string where = "model.particles[" + std::to_string(i) + "]";
        const json& p = parts[i];
        if (!p.is_object()) throw ConfigError(where, "must be an object");
        reject_unknown(p, where, {"mass", "spring_k", "channel"});
        ParticleSpec spec;
        spec.mass = number(p, "mass", where, 1.0);
        spec.spring_k = number(p, "spring_k", where, 1.0);
        spec.display_channel = default_channel(i);
        if (p.contains("channel")) {
            if (!p.at("channel").is_string()) throw ConfigError(where + ".channel", "must be a string");
            check(where + ".channel", [&] { spec.display_channel = channel_from_string(p.at("channel").get<std::string>()); });
        }
        cfg.model.particles.push_back(spec);
    }

    if (doc.contains("sim")) {
        const json& s = require_object(doc, "sim", "");
        reject_unknown(s, "sim", {"dt", "dt_safety", "steps_per_frame", "seed"});
        if (s.contains("dt") && !s.at("dt").is_null()) cfg.sim.dt = number(s, "dt", "sim", std::nullopt);
        cfg.sim.dt_safety = number(s, "dt_safety", "sim", 0.1);
        cfg.sim.steps_per_frame = integer(s, "steps_per_frame", "sim", 1);
        if (s.contains("seed")) {
            if (!s.at("seed").is_number_unsigned()) throw ConfigError("sim.seed", "must be a non-negative integer");
            cfg.sim.seed = s.at("seed").get<std::uint64_t>();
        }
    }

    if (!doc.contains("initial") || !doc.at("initial").is_array()) throw ConfigError("initial", "must be an array");
    const json& init = doc.at("initial");
    for (std::size_t i = 0; i < init.size(); ++i) {
        const std::string where = "initial[" + std::to_string(i) + "]";
        const json& e = init[i];
        if (!e.is_object()) throw ConfigError(where, "must be an object");
        reject_unknown(e, where, {"center", "width", "momentum"});
        GaussianSpec spec;
        spec.center = point(e, "center", where, std::nullopt);
        spec.width = number(e, "width", where, std::nullopt);
        spec.momentum = point(e, "momentum", where, Point2{});
        cfg.initial.push_back(spec);
    }

    cfg.validate();
    return cfg;
}

json config_to_json(const SessionConfig& cfg) {
    json doc;
    doc["grid"] = {{"m", cfg.grid.m}, {"n", cfg.grid.n}, {"dx", cfg.grid.dx}, {"dy", cfg.grid.dy}};
    json parts = json::array();
    for (const auto& p : cfg.model.particles)
        parts.push_back({{"mass", p.mass}, {"spring_k", p.spring_k}, {"channel", std::string(to_string(p.display_channel))}});
    doc["model"] = {{"hbar", cfg.model.hbar},
                    {"potential_mode", std::string(to_string(cfg.model.potential_mode))},
                    {"particles", parts}};
    json sim = {{"dt_safety", cfg.sim.dt_safety}, {"steps_per_frame", cfg.sim.steps_per_frame}, {"seed", cfg.sim.seed}};
    if (cfg.sim.dt) sim["dt"] = *cfg.sim.dt;
    doc["sim"] = sim;
    json init = json::array();
    for (const auto& g : cfg.initial)
        init.push_back({{"center", {g.center.x, g.center.y}},
                        {"width", g.width},
                        {"momentum", {g.momentum.x, g.momentum.y}}});
    doc["initial"] = init;
    return doc;
}

std::string canonical_json(const SessionConfig& cfg) {
    return config_to_json(cfg).dump();
}

SessionConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

} // namespace qlps
