#pragma once

// Test-only oracles. Nothing here calls the kernels or the Hamiltonian class:
// matrices are assembled by enumerating configurations directly.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qlps/grid.hpp"
#include "qlps/model.hpp"
#include "qlps/wavefunction.hpp"

namespace qlps::testing {

/// Dense Hamiltonian built entry by entry: the potential on the diagonal plus,
/// for each particle, the 3-point second differences in x and y with periodic
/// neighbours. Adjacent configurations differ in one particle by one cell.
inline Eigen::MatrixXcd brute_force_hamiltonian(const GridSpec& g, const ModelParams& p) {
    const std::size_t n_particles = p.size();
    const std::size_t total = state_size(g, n_particles);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
    const double hbar2 = p.hbar * p.hbar;
    for (std::size_t i = 0; i < total; ++i) {
        const Configuration cfg = config_from_index(i, g, n_particles);
        const auto row = static_cast<Eigen::Index>(i);
        h(row, row) += potential_at(cfg, g, p);
        for (std::size_t k = 0; k < n_particles; ++k) {
            const double cx = hbar2 / (2.0 * p.particles[k].mass * g.dx * g.dx);
            const double cy = hbar2 / (2.0 * p.particles[k].mass * g.dy * g.dy);
            h(row, row) += 2.0 * cx + 2.0 * cy;
            for (int d : {-1, 1}) {
                Configuration nx = cfg;
                nx[k].ax = ((cfg[k].ax + d) % g.m + g.m) % g.m;
                h(row, static_cast<Eigen::Index>(config_index(nx, g, n_particles))) -= cx;
                Configuration ny = cfg;
                ny[k].ay = ((cfg[k].ay + d) % g.n + g.n) % g.n;
                h(row, static_cast<Eigen::Index>(config_index(ny, g, n_particles))) -= cy;
            }
        }
    }
    return h;
}

/// exp(-iHt/hbar) by a 30-term Taylor series with scaling and squaring.
/// Independent of the eigendecomposition route used by DenseOracle.
inline Eigen::MatrixXcd propagator_taylor(const Eigen::MatrixXcd& h, double t, double hbar) {
    const std::complex<double> factor(0.0, -t / hbar);
    Eigen::MatrixXcd a = factor * h;
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
    a /= std::pow(2.0, squarings);
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
    Eigen::MatrixXcd term = result;
    for (int k = 1; k <= 30; ++k) {
        term = term * a / static_cast<double>(k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

inline Eigen::VectorXcd as_vector(const WaveFunction& psi) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) v(static_cast<Eigen::Index>(i)) = psi[i];
    return v;
}

inline WaveFunction from_vector(const GridSpec& g, std::size_t n_particles, const Eigen::VectorXcd& v) {
    return WaveFunction(g, n_particles, std::vector<Complex>(v.data(), v.data() + v.size()));
}

inline WaveFunction random_state(const GridSpec& g, std::size_t n_particles, std::uint64_t seed, bool normalize_it = true) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    WaveFunction psi(g, n_particles);
    for (auto& a : psi.amplitudes()) a = Complex{dist(rng), dist(rng)};
    if (normalize_it) normalize(psi);
    return psi;
}

/// Random normalized single-particle factor in cell-slot order.
inline std::vector<Complex> random_factor(const GridSpec& g, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    std::vector<Complex> f(g.cell_count());
    double n2 = 0.0;
    for (auto& a : f) {
        a = Complex{dist(rng), dist(rng)};
        n2 += std::norm(a);
    }
    for (auto& a : f) a /= std::sqrt(n2);
    return f;
}

inline ModelParams unit_model(std::size_t n_particles, double spring_k = 1.0) {
    ModelParams p;
    p.particles.assign(n_particles, ParticleSpec{1.0, spring_k, Channel::none});
    return p;
}

inline double max_abs_diff(const WaveFunction& a, const WaveFunction& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace qlps::testing
