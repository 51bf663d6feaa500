#include "qlps/grid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qlps/error.hpp"

namespace qlps {

void GridSpec::validate() const {
    if (m < 2) throw InvalidArgument("grid.m must be >= 2 (got " + std::to_string(m) + ")");
    if (n < 2) throw InvalidArgument("grid.n must be >= 2 (got " + std::to_string(n) + ")");
    if (!(dx > 0.0) || !std::isfinite(dx)) throw InvalidArgument("grid.dx must be a positive finite number");
    if (!(dy > 0.0) || !std::isfinite(dy)) throw InvalidArgument("grid.dy must be a positive finite number");
}

bool in_bounds(const Cell& c, const GridSpec& grid) noexcept {
    return c.ax >= 0 && c.ax < grid.m && c.ay >= 0 && c.ay < grid.n;
}

Cell wrap(int ax, int ay, const GridSpec& grid) noexcept {
    int wx = ax % grid.m;
    int wy = ay % grid.n;
    if (wx < 0) wx += grid.m;
    if (wy < 0) wy += grid.n;
    return {wx, wy};
}

std::size_t state_size(const GridSpec& grid, std::size_t n_particles) {
    const std::size_t cells = grid.cell_count();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n_particles; ++i) {
        if (total > std::numeric_limits<std::size_t>::max() / cells)
            throw InvalidArgument("state size overflows");
        total *= cells;
    }
    return total;
}

std::size_t particle_stride(const GridSpec& grid, std::size_t n_particles, std::size_t k) {
    if (k >= n_particles) throw InvalidArgument("particle index out of range");
    return state_size(grid, n_particles - 1 - k);
}

std::size_t config_index(const Configuration& cfg, const GridSpec& grid, std::size_t n_particles) {
    if (cfg.size() != n_particles)
        throw InvalidArgument("configuration has " + std::to_string(cfg.size()) + " cells, expected " +
                              std::to_string(n_particles));
    std::size_t index = 0;
    for (const Cell& c : cfg) {
        if (!in_bounds(c, grid)) throw InvalidArgument("cell outside grid");
        index = index * grid.cell_count() + cell_slot(c, grid);
    }
    return index;
}

Configuration config_from_index(std::size_t index, const GridSpec& grid, std::size_t n_particles) {
    if (index >= state_size(grid, n_particles)) throw InvalidArgument("configuration index out of range");
    const std::size_t cells = grid.cell_count();
    Configuration cfg(n_particles);
    for (std::size_t k = n_particles; k-- > 0;) {
        const std::size_t slot = index % cells;
        index /= cells;
        cfg[k] = Cell{static_cast<int>(slot / grid.n), static_cast<int>(slot % grid.n)};
    }
    return cfg;
}

} // namespace qlps
