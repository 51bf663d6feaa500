#include "qlps/model.hpp"

#include <cmath>
#include <string>

#include "qlps/error.hpp"

namespace qlps {

double distance(const Point2& a, const Point2& b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::string_view to_string(Channel c) noexcept {
    switch (c) {
    case Channel::red: return "red";
    case Channel::green: return "green";
    case Channel::blue: return "blue";
    case Channel::none: return "none";
    }
    return "none";
}

Channel channel_from_string(std::string_view name) {
    if (name == "red") return Channel::red;
    if (name == "green") return Channel::green;
    if (name == "blue") return Channel::blue;
    if (name == "none") return Channel::none;
    throw InvalidArgument("unknown display channel '" + std::string(name) + "'");
}

std::string_view to_string(PotentialMode mode) noexcept {
    return mode == PotentialMode::raw ? "raw" : "minimal_image";
}

PotentialMode potential_mode_from_string(std::string_view name) {
    if (name == "raw") return PotentialMode::raw;
    if (name == "minimal_image") return PotentialMode::minimal_image;
    throw InvalidArgument("unknown potential mode '" + std::string(name) + "'");
}

double ModelParams::total_spring() const noexcept {
    double total = 0.0;
    for (const auto& p : particles) total += p.spring_k;
    return total;
}

void ModelParams::validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidArgument("model.hbar must be a positive finite number");
    if (particles.empty()) throw InvalidArgument("model.particles must contain at least one particle");
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const auto& p = particles[i];
        const std::string where = "model.particles[" + std::to_string(i) + "]";
        if (!(p.mass > 0.0) || !std::isfinite(p.mass)) throw InvalidArgument(where + ".mass must be positive");
        if (!(p.spring_k >= 0.0) || !std::isfinite(p.spring_k))
            throw InvalidArgument(where + ".spring_k must be non-negative");
    }
    if (particles.size() >= 2 && !(total_spring() > 0.0))
        throw InvalidArgument("model.particles: total spring constant must be positive for N >= 2");
}

namespace {

// Coordinates of every particle, moved to the periodic image nearest particle 0 when requested.
std::vector<Point2> coordinates(const Configuration& cfg, const GridSpec& grid, PotentialMode mode) {
    std::vector<Point2> q(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i)
        q[i] = {cfg[i].ax * grid.dx, cfg[i].ay * grid.dy};
    if (mode == PotentialMode::minimal_image && !q.empty()) {
        const double lx = grid.m * grid.dx;
        const double ly = grid.n * grid.dy;
        for (std::size_t i = 1; i < q.size(); ++i) {
            q[i].x -= std::round((q[i].x - q[0].x) / lx) * lx;
            q[i].y -= std::round((q[i].y - q[0].y) / ly) * ly;
        }
    }
    return q;
}

Point2 weighted_center(const std::vector<Point2>& q, const ModelParams& params) {
    const double total = params.total_spring();
    if (!(total > 0.0)) throw InvalidArgument("degenerate binding: total spring constant is zero");
    Point2 c;
    for (std::size_t i = 0; i < q.size(); ++i) {
        c.x += params.particles[i].spring_k * q[i].x;
        c.y += params.particles[i].spring_k * q[i].y;
    }
    c.x /= total;
    c.y /= total;
    return c;
}

void check_sizes(const Configuration& cfg, const GridSpec& grid, const ModelParams& params) {
    if (cfg.size() != params.size()) throw InvalidArgument("configuration length does not match particle count");
    for (const Cell& c : cfg)
        if (!in_bounds(c, grid)) throw InvalidArgument("cell outside grid");
}

} // namespace

Point2 center_of_force(const Configuration& cfg, const GridSpec& grid, const ModelParams& params) {
    check_sizes(cfg, grid, params);
    return weighted_center(coordinates(cfg, grid, params.potential_mode), params);
}

double potential_at(const Configuration& cfg, const GridSpec& grid, const ModelParams& params) {
    check_sizes(cfg, grid, params);
    if (cfg.size() == 1) return 0.0;
    const auto q = coordinates(cfg, grid, params.potential_mode);
    const Point2 c = weighted_center(q, params);
    double v = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double ddx = q[i].x - c.x;
        const double ddy = q[i].y - c.y;
        v += 0.5 * params.particles[i].spring_k * (ddx * ddx + ddy * ddy);
    }
    return v;
}

} // namespace qlps
