#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qlps {

/// Periodic m x n lattice. Cell (ax, ay) sits at q = (ax*dx, ay*dy); indices are 0-based.
struct GridSpec {
    int m = 2;
    int n = 2;
    double dx = 1.0;
    double dy = 1.0;

    std::size_t cell_count() const noexcept { return static_cast<std::size_t>(m) * static_cast<std::size_t>(n); }

    /// Throws InvalidArgument naming the offending field.
    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

struct Cell {
    int ax = 0;
    int ay = 0;

    bool operator==(const Cell&) const = default;
};

/// One cell per particle.
using Configuration = std::vector<Cell>;

bool in_bounds(const Cell& c, const GridSpec& grid) noexcept;

/// Wraps arbitrary integer indices onto the torus.
Cell wrap(int ax, int ay, const GridSpec& grid) noexcept;

/// Index of a single cell inside one particle's block: ax * n + ay.
inline std::size_t cell_slot(const Cell& c, const GridSpec& grid) noexcept {
    return static_cast<std::size_t>(c.ax) * static_cast<std::size_t>(grid.n) + static_cast<std::size_t>(c.ay);
}

/// (m*n)^N. Throws InvalidArgument on overflow.
std::size_t state_size(const GridSpec& grid, std::size_t n_particles);

/// Stride of particle k's cell slot in the flat amplitude array: (m*n)^(N-1-k).
std::size_t particle_stride(const GridSpec& grid, std::size_t n_particles, std::size_t k);

/// Row-major flat index; particle 0's ax varies slowest, particle N-1's ay fastest.
std::size_t config_index(const Configuration& cfg, const GridSpec& grid, std::size_t n_particles);

/// Inverse of config_index.
Configuration config_from_index(std::size_t index, const GridSpec& grid, std::size_t n_particles);

} // namespace qlps
