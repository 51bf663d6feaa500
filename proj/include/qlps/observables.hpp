#pragma once

#include <cstddef>
#include <vector>

#include "qlps/hamiltonian.hpp"
#include "qlps/model.hpp"
#include "qlps/wavefunction.hpp"

namespace qlps {

/// Single-particle probability field. Values are stored in image order:
/// index ay*m + ax (rows of constant ay, ax increasing along a row).
struct Marginal2D {
    GridSpec grid;
    std::vector<double> values;

    double at(int ax, int ay) const { return values[static_cast<std::size_t>(ay) * grid.m + ax]; }
    double at(const Cell& c) const { return at(c.ax, c.ay); }
    double sum() const;
    double max() const;

    bool operator==(const Marginal2D&) const = default;
};

Marginal2D marginal(const WaveFunction& psi, std::size_t k);
std::vector<Marginal2D> all_marginals(const WaveFunction& psi);

/// Probability of finding each particle in `cell`.
std::vector<double> detection_probs(const WaveFunction& psi, const Cell& cell);

/// <psi| p_k^2/2m_k |psi>.
double kinetic_energy(const WaveFunction& psi, std::size_t k, const ModelParams& params);
double kinetic_energy(const WaveFunction& psi, std::size_t k, const Hamiltonian& h);

/// <psi|H|psi>.
double total_energy(const WaveFunction& psi, const ModelParams& params);
double total_energy(const WaveFunction& psi, const Hamiltonian& h);

/// Mean of (ax*dx, ay*dy) under particle k's marginal, using raw (unwrapped) coordinates.
Point2 expected_position(const WaveFunction& psi, std::size_t k);
Point2 expected_position(const Marginal2D& marginal);

} // namespace qlps
