#include "qlps/session/session.hpp"

#include "qlps/initial_state.hpp"

namespace qlps {

namespace {

double resolve_dt(const SessionConfig& cfg) {
    cfg.validate();
    return cfg.sim.dt ? *cfg.sim.dt : choose_dt(cfg.grid, cfg.model, cfg.sim.dt_safety);
}

} // namespace

Session::Session(SessionConfig config) : Session(std::move(config), -1.0) {}

Session::Session(SessionConfig config, double dt)
    : config_(std::move(config)),
      dt_(dt < 0.0 ? resolve_dt(config_) : dt),
      steps_per_frame_(config_.sim.steps_per_frame),
      stepper_(Hamiltonian(config_.grid, config_.model)),
      psi_(gaussian_product_state(config_.grid, config_.model, config_.initial)),
      rng_(config_.sim.seed) {}

FrameResult Session::advance_frame() {
    if (status_ != SessionStatus::running) throw NotRunning();
    try {
        for (int i = 0; i < steps_per_frame_; ++i) {
            pre_norm_ = stepper_.advance(psi_, dt_);
            t_ += dt_;
        }
    } catch (const UnstableStep&) {
        status_ = SessionStatus::paused;
        throw;
    }
    ++frame_no_;
    return observe();
}

FrameResult Session::observe() const {
    const Hamiltonian& h = stepper_.hamiltonian();
    FrameResult r;
    r.marginals = all_marginals(psi_);
    FrameStats& s = r.stats;
    s.t = t_;
    s.pre_norm = pre_norm_;
    s.total_energy = total_energy(psi_, h);
    const std::size_t n = psi_.particles();
    double total_k = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s.kinetic.push_back(kinetic_energy(psi_, k, h));
        s.expected_pos.push_back(expected_position(r.marginals[k]));
        const double w = config_.model.particles[k].spring_k;
        s.cm.x += w * s.expected_pos[k].x;
        s.cm.y += w * s.expected_pos[k].y;
        total_k += w;
    }
    if (total_k > 0.0) {
        s.cm.x /= total_k;
        s.cm.y /= total_k;
    } else {
        s.cm = s.expected_pos[0];
    }
    return r;
}

MeasurementOutcome Session::handle_click(const Cell& cell) {
    if (!in_bounds(cell, config_.grid)) throw InvalidArgument("cell outside grid");
    MeasurementOutcome outcome = sample_detection(psi_, cell, rng_);
    if (outcome.detected) collapse_in_place(psi_, *outcome.detected, cell);
    return outcome;
}

void Session::reset() {
    psi_ = gaussian_product_state(config_.grid, config_.model, config_.initial);
    t_ = 0.0;
    frame_no_ = 0;
    pre_norm_ = 1.0;
    status_ = SessionStatus::running;
}

void Session::set_steps_per_frame(int steps) {
    if (steps < 1) throw InvalidArgument("steps_per_frame must be >= 1");
    steps_per_frame_ = steps;
}

Session Session::restore(SessionConfig config, RestoreState state) {
    Session s(std::move(config), state.dt);
    if (!(state.psi.grid() == s.grid()) || state.psi.particles() != s.model().size())
        throw InvalidArgument("restored wavefunction does not match config");
    s.set_steps_per_frame(state.steps_per_frame);
    s.t_ = state.t;
    s.frame_no_ = state.frame_no;
    s.status_ = state.status;
    s.pre_norm_ = state.pre_norm;
    s.rng_ = std::move(state.rng);
    s.psi_ = std::move(state.psi);
    return s;
}

} // namespace qlps
