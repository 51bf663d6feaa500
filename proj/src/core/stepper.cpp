#include "qlps/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "qlps/error.hpp"

namespace qlps {

Stepper::Stepper(Hamiltonian hamiltonian)
    : hamiltonian_(std::move(hamiltonian)), scratch_(hamiltonian_.size()) {}

double Stepper::advance(WaveFunction& psi, double dt) {
    if (!(dt >= 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be a non-negative finite number");
    auto amps = psi.amplitudes();
    if (dt == 0.0) return kernels::norm_squared(amps);

    hamiltonian_.apply(amps, scratch_);
    backup_.assign(amps.begin(), amps.end());
    const double pre_norm = kernels::euler_update(amps, scratch_, dt / hamiltonian_.params().hbar);
    if (!std::isfinite(pre_norm) || !(pre_norm > 0.0)) {
        std::copy(backup_.begin(), backup_.end(), amps.begin());
        throw UnstableStep(pre_norm);
    }
    kernels::scale(amps, 1.0 / std::sqrt(pre_norm));
    return pre_norm;
}

StepResult step(const WaveFunction& psi, const ModelParams& params, double dt) {
    Stepper stepper(Hamiltonian(psi.grid(), params));
    StepResult result{psi, 0.0};
    result.pre_norm = stepper.advance(result.psi, dt);
    return result;
}

double energy_bound(const GridSpec& grid, const ModelParams& params) {
    const double hbar2 = params.hbar * params.hbar;
    const double inv = 1.0 / (grid.dx * grid.dx) + 1.0 / (grid.dy * grid.dy);
    const double lx = grid.m * grid.dx;
    const double ly = grid.n * grid.dy;
    const double diag2 = lx * lx + ly * ly;
    double kinetic = 0.0;
    double potential = 0.0;
    for (const auto& p : params.particles) {
        kinetic += 2.0 * (hbar2 / p.mass) * inv;
        potential += 0.5 * p.spring_k * diag2;
    }
    return kinetic + potential;
}

double choose_dt(const GridSpec& grid, const ModelParams& params, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("dt safety factor must lie in (0, 1]");
    grid.validate();
    params.validate();
    return alpha * params.hbar / energy_bound(grid, params);
}

} // namespace qlps
