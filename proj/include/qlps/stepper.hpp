#pragma once

#include <vector>

#include "qlps/hamiltonian.hpp"
#include "qlps/wavefunction.hpp"

namespace qlps {

struct StepResult {
    WaveFunction psi;
    double pre_norm;
};

/// One explicit step psi <- normalize(psi - i dt/hbar H psi).
/// dt == 0 returns psi untouched. Throws UnstableStep on a non-finite or zero result.
StepResult step(const WaveFunction& psi, const ModelParams& params, double dt);

/// Reusable stepper that keeps the Hamiltonian and a scratch buffer alive.
class Stepper {
public:
    explicit Stepper(Hamiltonian hamiltonian);

    const Hamiltonian& hamiltonian() const noexcept { return hamiltonian_; }

    /// In-place step; returns the squared norm before renormalization.
    /// On UnstableStep psi is left as it was before the call.
    double advance(WaveFunction& psi, double dt);

private:
    Hamiltonian hamiltonian_;
    std::vector<Complex> scratch_;
    std::vector<Complex> backup_;
};

/// Conservative spectral bound used to pick dt:
///   sum_i 2 (hbar^2/m_i)(1/dx^2 + 1/dy^2) + sum_i (k_i/2) ((m dx)^2 + (n dy)^2).
double energy_bound(const GridSpec& grid, const ModelParams& params);

/// alpha * hbar / energy_bound. alpha must lie in (0, 1].
double choose_dt(const GridSpec& grid, const ModelParams& params, double alpha);

} // namespace qlps
