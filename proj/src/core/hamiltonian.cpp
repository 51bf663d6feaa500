#include "qlps/hamiltonian.hpp"

#include <string>

#include "qlps/error.hpp"

namespace qlps {

Hamiltonian::Hamiltonian(const GridSpec& grid, ModelParams params) : params_(std::move(params)) {
    grid.validate();
    params_.validate();

    plan_.grid = grid;
    const double hbar2 = params_.hbar * params_.hbar;
    double kinetic_diag = 0.0;
    for (const auto& p : params_.particles) {
        kernels::StencilWeights w{-hbar2 / (2.0 * p.mass * grid.dx * grid.dx),
                                  -hbar2 / (2.0 * p.mass * grid.dy * grid.dy)};
        kinetic_diag += w.diagonal();
        plan_.weights.push_back(w);
    }

    const std::size_t n_particles = params_.size();
    const std::size_t total = state_size(grid, n_particles);
    potential_.resize(total);
    plan_.diagonal.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        potential_[i] = potential_at(config_from_index(i, grid, n_particles), grid, params_);
        plan_.diagonal[i] = potential_[i] + kinetic_diag;
    }
}

void Hamiltonian::apply(std::span<const Complex> in, std::span<Complex> out) const {
    if (in.size() != size() || out.size() != size()) throw InvalidArgument("state size does not match Hamiltonian");
    kernels::apply_hamiltonian(plan_, in, out);
}

void Hamiltonian::apply_kinetic(std::size_t k, std::span<const Complex> in, std::span<Complex> out) const {
    if (k >= particles()) throw InvalidArgument("particle index " + std::to_string(k) + " out of range");
    if (in.size() != size() || out.size() != size()) throw InvalidArgument("state size does not match Hamiltonian");
    kernels::apply_kinetic(plan_, k, in, out);
}

void Hamiltonian::check(const WaveFunction& psi) const {
    if (psi.particles() != particles() || !(psi.grid() == grid()))
        throw InvalidArgument("wavefunction does not match Hamiltonian grid/particle count");
}

WaveFunction Hamiltonian::apply(const WaveFunction& psi) const {
    check(psi);
    WaveFunction out(psi.grid(), psi.particles());
    apply(psi.amplitudes(), out.amplitudes());
    return out;
}

WaveFunction Hamiltonian::apply_kinetic(const WaveFunction& psi, std::size_t k) const {
    check(psi);
    WaveFunction out(psi.grid(), psi.particles());
    apply_kinetic(k, psi.amplitudes(), out.amplitudes());
    return out;
}

WaveFunction apply_kinetic(const WaveFunction& psi, std::size_t k, const ModelParams& params) {
    if (k >= params.size()) throw InvalidArgument("particle index " + std::to_string(k) + " out of range");
    return Hamiltonian(psi.grid(), params).apply_kinetic(psi, k);
}

WaveFunction apply_hamiltonian(const WaveFunction& psi, const ModelParams& params) {
    return Hamiltonian(psi.grid(), params).apply(psi);
}

} // namespace qlps
