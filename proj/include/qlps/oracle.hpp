#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "qlps/model.hpp"
#include "qlps/wavefunction.hpp"

namespace qlps {

/// Largest state the dense routines accept.
inline constexpr std::size_t kOracleMaxSize = 4096;

/// Explicit H assembled column by column from apply_hamiltonian on basis vectors.
Eigen::MatrixXcd dense_hamiltonian(const GridSpec& grid, const ModelParams& params);

/// Exact propagator exp(-iHt/hbar) via Hermitian eigendecomposition.
class DenseOracle {
public:
    DenseOracle(const GridSpec& grid, const ModelParams& params);

    WaveFunction evolve(const WaveFunction& psi, double t) const;

    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const noexcept { return eigenvectors_; }

private:
    GridSpec grid_;
    std::size_t n_particles_;
    double hbar_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// One-shot convenience wrapper. Throws InvalidArgument ("oracle scale exceeded")
/// when (m*n)^N > kOracleMaxSize.
WaveFunction dense_oracle_evolve(const WaveFunction& psi, const ModelParams& params, double t);

/// Euclidean distance between two states on the same grid.
double l2_distance(const WaveFunction& a, const WaveFunction& b);

} // namespace qlps
