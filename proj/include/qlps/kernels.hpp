#pragma once

// Low-level kernels over flat amplitude arrays.
//
// Functions in qlps::kernels are the production path: pointwise work is
// OpenMP-parallel over the configuration index and every reduction uses a
// fixed chunk decomposition, so results are bit-identical for any thread
// count. qlps::kernels::reference holds straightforward serial versions that
// the tests and the benchmark compare against.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qlps/grid.hpp"

namespace qlps::kernels {

using Complex = std::complex<double>;

/// Reduction chunk length. Part of the determinism contract; do not tie it to thread count.
inline constexpr std::size_t kReduceChunk = 4096;

/// Off-diagonal stencil weights for one particle: -hbar^2/(2 m dx^2) and -hbar^2/(2 m dy^2).
struct StencilWeights {
    double wx = 0.0;
    double wy = 0.0;

    double diagonal() const noexcept { return -2.0 * (wx + wy); }
};

/// Description of the Hamiltonian needed by the kernels: grid shape, per-particle
/// stencil weights and the diagonal (potential plus all kinetic diagonals).
struct StencilPlan {
    GridSpec grid;
    std::vector<StencilWeights> weights;
    std::vector<double> diagonal;  // one entry per configuration

    std::size_t particles() const noexcept { return weights.size(); }
    std::size_t size() const noexcept { return diagonal.size(); }
};

/// out = H in, where H is the full plan.
void apply_hamiltonian(const StencilPlan& plan, std::span<const Complex> in, std::span<Complex> out);

/// out = (kinetic operator of particle k) in, diagonal included.
void apply_kinetic(const StencilPlan& plan, std::size_t k, std::span<const Complex> in, std::span<Complex> out);

/// psi <- psi - i*scale*h_psi; returns the resulting squared norm.
double euler_update(std::span<Complex> psi, std::span<const Complex> h_psi, double scale);

double norm_squared(std::span<const Complex> v);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
void scale(std::span<Complex> v, double factor);

/// Per-cell probability for particle k, indexed by cell slot (ax*n + ay).
std::vector<double> marginal(std::span<const Complex> psi, const GridSpec& grid, std::size_t n_particles, std::size_t k);

/// Zeroes every amplitude whose particle-k cell slot differs from `slot`.
/// Returns the squared norm that was removed.
double mask_particle(std::span<Complex> psi, const GridSpec& grid, std::size_t n_particles, std::size_t k, std::size_t slot);

namespace reference {

// Serial, index-decoding versions. Slow; kept for verification and benchmarking.

void apply_hamiltonian(const StencilPlan& plan, std::span<const Complex> in, std::span<Complex> out);
void apply_kinetic(const StencilPlan& plan, std::size_t k, std::span<const Complex> in, std::span<Complex> out);
double norm_squared(std::span<const Complex> v);
std::vector<double> marginal(std::span<const Complex> psi, const GridSpec& grid, std::size_t n_particles, std::size_t k);

} // namespace reference

/// Number of OpenMP threads the kernels will use (1 when built without OpenMP).
int max_threads() noexcept;

} // namespace qlps::kernels
