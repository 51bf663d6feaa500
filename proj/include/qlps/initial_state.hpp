#pragma once

#include <vector>

#include "qlps/model.hpp"
#include "qlps/wavefunction.hpp"

namespace qlps {

struct GaussianSpec {
    Point2 center;
    double width = 1.0;
    Point2 momentum;

    bool operator==(const GaussianSpec&) const = default;
};

/// Normalized product of exp(-|q-c|^2/(4 w^2)) exp(i p.q/hbar), one factor per particle.
WaveFunction gaussian_product_state(const GridSpec& grid, const ModelParams& params,
                                    const std::vector<GaussianSpec>& specs);

/// Product of arbitrary single-particle factors (each of length m*n in cell-slot order), normalized.
WaveFunction product_state(const GridSpec& grid, const std::vector<std::vector<Complex>>& factors);

/// All amplitude on one configuration.
WaveFunction delta_state(const GridSpec& grid, const Configuration& cfg);

/// Every amplitude equal, normalized.
WaveFunction uniform_state(const GridSpec& grid, std::size_t n_particles);

} // namespace qlps
