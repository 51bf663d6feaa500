#include "qlps/wavefunction.hpp"

#include <cmath>

#include "qlps/error.hpp"
#include "qlps/kernels.hpp"

namespace qlps {

WaveFunction::WaveFunction(const GridSpec& grid, std::size_t n_particles)
    : grid_(grid), n_particles_(n_particles) {
    grid_.validate();
    if (n_particles_ == 0) throw InvalidArgument("wavefunction needs at least one particle");
    amps_.assign(state_size(grid_, n_particles_), Complex{});
}

WaveFunction::WaveFunction(const GridSpec& grid, std::size_t n_particles, std::vector<Complex> amplitudes)
    : grid_(grid), n_particles_(n_particles), amps_(std::move(amplitudes)) {
    grid_.validate();
    if (n_particles_ == 0) throw InvalidArgument("wavefunction needs at least one particle");
    if (amps_.size() != state_size(grid_, n_particles_))
        throw InvalidArgument("amplitude count does not match (m*n)^N");
}

Complex& WaveFunction::at(const Configuration& cfg) {
    return amps_[config_index(cfg, grid_, n_particles_)];
}

const Complex& WaveFunction::at(const Configuration& cfg) const {
    return amps_[config_index(cfg, grid_, n_particles_)];
}

bool WaveFunction::all_finite() const noexcept {
    for (const Complex& c : amps_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

double norm_squared(const WaveFunction& psi) {
    return kernels::norm_squared(psi.amplitudes());
}

Complex inner_product(const WaveFunction& a, const WaveFunction& b) {
    if (a.size() != b.size()) throw InvalidArgument("inner product of states with different sizes");
    return kernels::inner_product(a.amplitudes(), b.amplitudes());
}

void normalize(WaveFunction& psi) {
    const double n2 = norm_squared(psi);
    if (!(n2 > 0.0)) throw InvalidArgument("null state");
    if (!std::isfinite(n2)) throw InvalidArgument("non-finite state");
    kernels::scale(psi.amplitudes(), 1.0 / std::sqrt(n2));
}

WaveFunction normalized(WaveFunction psi) {
    normalize(psi);
    return psi;
}

} // namespace qlps
