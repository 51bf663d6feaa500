#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qlps/kernels.hpp"
#include "qlps/model.hpp"
#include "qlps/wavefunction.hpp"

namespace qlps {

/// Finite-difference Hamiltonian for a fixed grid and model: 3-point second
/// differences per coordinate with periodic wraparound, plus the common-center
/// harmonic potential tabulated once per configuration.
class Hamiltonian {
public:
    Hamiltonian(const GridSpec& grid, ModelParams params);

    const GridSpec& grid() const noexcept { return plan_.grid; }
    const ModelParams& params() const noexcept { return params_; }
    std::size_t particles() const noexcept { return params_.size(); }
    std::size_t size() const noexcept { return plan_.size(); }

    std::span<const double> potential() const noexcept { return potential_; }
    const kernels::StencilPlan& plan() const noexcept { return plan_; }

    void apply(std::span<const Complex> in, std::span<Complex> out) const;
    void apply_kinetic(std::size_t k, std::span<const Complex> in, std::span<Complex> out) const;

    WaveFunction apply(const WaveFunction& psi) const;
    WaveFunction apply_kinetic(const WaveFunction& psi, std::size_t k) const;

private:
    void check(const WaveFunction& psi) const;

    ModelParams params_;
    std::vector<double> potential_;
    kernels::StencilPlan plan_;
};

/// (p_k^2 / 2 m_k) psi. Throws InvalidArgument when k >= N.
WaveFunction apply_kinetic(const WaveFunction& psi, std::size_t k, const ModelParams& params);

/// H psi = sum_k kinetic_k psi + V psi.
WaveFunction apply_hamiltonian(const WaveFunction& psi, const ModelParams& params);

} // namespace qlps
