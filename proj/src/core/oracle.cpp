#include "qlps/oracle.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qlps/error.hpp"
#include "qlps/hamiltonian.hpp"

namespace qlps {

namespace {

std::size_t checked_size(const GridSpec& grid, std::size_t n_particles) {
    grid.validate();
    const std::size_t total = state_size(grid, n_particles);
    if (total > kOracleMaxSize) throw InvalidArgument("oracle scale exceeded");
    return total;
}

} // namespace

Eigen::MatrixXcd dense_hamiltonian(const GridSpec& grid, const ModelParams& params) {
    const std::size_t total = checked_size(grid, params.size());
    const Hamiltonian h(grid, params);
    Eigen::MatrixXcd dense(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
    std::vector<Complex> basis(total), column(total);
    for (std::size_t j = 0; j < total; ++j) {
        basis[j] = 1.0;
        h.apply(basis, column);
        basis[j] = 0.0;
        for (std::size_t i = 0; i < total; ++i) dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = column[i];
    }
    return dense;
}

DenseOracle::DenseOracle(const GridSpec& grid, const ModelParams& params)
    : grid_(grid), n_particles_(params.size()), hbar_(params.hbar) {
    const Eigen::MatrixXcd h = dense_hamiltonian(grid, params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw Error("dense eigendecomposition failed");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

WaveFunction DenseOracle::evolve(const WaveFunction& psi, double t) const {
    if (psi.particles() != n_particles_ || !(psi.grid() == grid_))
        throw InvalidArgument("wavefunction does not match oracle");
    if (t == 0.0) return psi;
    const auto n = static_cast<Eigen::Index>(psi.size());
    const Eigen::Map<const Eigen::VectorXcd> in(psi.amplitudes().data(), n);

    Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * in;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double phase = -eigenvalues_(i) * t / hbar_;
        coeffs(i) *= Complex{std::cos(phase), std::sin(phase)};
    }
    const Eigen::VectorXcd out = eigenvectors_ * coeffs;
    return WaveFunction(psi.grid(), psi.particles(), std::vector<Complex>(out.data(), out.data() + n));
}

WaveFunction dense_oracle_evolve(const WaveFunction& psi, const ModelParams& params, double t) {
    checked_size(psi.grid(), psi.particles());
    return DenseOracle(psi.grid(), params).evolve(psi, t);
}

double l2_distance(const WaveFunction& a, const WaveFunction& b) {
    if (a.size() != b.size()) throw InvalidArgument("states differ in size");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
    return std::sqrt(acc);
}

} // namespace qlps
