#pragma once

#include <cstdint>
#include <vector>

#include "qlps/session/config.hpp"

namespace qlps::testing {

/// Small N-particle config on an m x n unit grid with Gaussians spread along the diagonal.
inline SessionConfig small_config(int m = 4, int n = 4, std::size_t particles = 2, std::uint64_t seed = 1) {
    SessionConfig cfg;
    cfg.grid = {m, n, 1.0, 1.0};
    const Channel channels[] = {Channel::red, Channel::green, Channel::blue};
    for (std::size_t i = 0; i < particles; ++i) {
        cfg.model.particles.push_back({1.0, 1.0, i < 3 ? channels[i] : Channel::none});
        const double c = 1.0 + 0.5 * static_cast<double>(i);
        cfg.initial.push_back({{c, c}, 1.0, {}});
    }
    cfg.sim.seed = seed;
    return cfg;
}

} // namespace qlps::testing
