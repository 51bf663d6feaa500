#pragma once

#include <cstdint>
#include <vector>

#include "qlps/measurement.hpp"
#include "qlps/observables.hpp"
#include "qlps/session/config.hpp"
#include "qlps/stepper.hpp"
#include "qlps/wavefunction.hpp"

namespace qlps {

/// Diagnostics emitted after each frame.
struct FrameStats {
    double t = 0.0;
    double pre_norm = 1.0;  // squared norm before the last renormalization
    double total_energy = 0.0;
    std::vector<double> kinetic;
    std::vector<Point2> expected_pos;
    Point2 cm;  // spring-weighted mean of expected_pos

    bool operator==(const FrameStats&) const = default;
};

struct FrameResult {
    FrameStats stats;
    std::vector<Marginal2D> marginals;
};

enum class SessionStatus { running, paused };

class NotRunning : public Error {
public:
    NotRunning() : Error("not running") {}
};

/// A simulation owning one wavefunction. Not thread-safe; move it between
/// threads freely but never share it.
class Session {
public:
    /// Validates the config, resolves dt, builds the initial Gaussian product state
    /// and seeds the RNG. Throws ConfigError.
    explicit Session(SessionConfig config);

    const SessionConfig& config() const noexcept { return config_; }
    const GridSpec& grid() const noexcept { return config_.grid; }
    const ModelParams& model() const noexcept { return config_.model; }
    double dt() const noexcept { return dt_; }
    int steps_per_frame() const noexcept { return steps_per_frame_; }
    const WaveFunction& psi() const noexcept { return psi_; }
    double time() const noexcept { return t_; }
    std::uint64_t frame_no() const noexcept { return frame_no_; }
    SessionStatus status() const noexcept { return status_; }
    const Rng& rng() const noexcept { return rng_; }
    double last_pre_norm() const noexcept { return pre_norm_; }

    /// Runs steps_per_frame steps. Throws NotRunning when paused. On UnstableStep
    /// the session pauses, keeps the last good state, and rethrows.
    FrameResult advance_frame();

    /// Samples a detection at `cell` and collapses on success. Throws
    /// InvalidArgument for cells off the grid.
    MeasurementOutcome handle_click(const Cell& cell);

    void pause() noexcept { status_ = SessionStatus::paused; }
    void resume() noexcept { status_ = SessionStatus::running; }

    /// Rebuilds the initial state and zeroes time and frame count. The RNG stream continues.
    void reset();

    void set_steps_per_frame(int steps);

    /// Stats and marginals of the current state without stepping.
    FrameResult observe() const;

    struct RestoreState {
        double dt;
        int steps_per_frame;
        double t;
        std::uint64_t frame_no;
        SessionStatus status;
        double pre_norm;
        Rng rng;
        WaveFunction psi;
    };

    /// Reassembles a session from persisted parts (used by snapshots).
    static Session restore(SessionConfig config, RestoreState state);

private:
    Session(SessionConfig config, double dt);

    SessionConfig config_;
    double dt_;
    int steps_per_frame_;
    Stepper stepper_;
    WaveFunction psi_;
    double t_ = 0.0;
    std::uint64_t frame_no_ = 0;
    double pre_norm_ = 1.0;
    SessionStatus status_ = SessionStatus::running;
    Rng rng_;
};

} // namespace qlps
