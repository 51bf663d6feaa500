#include "qlps/measurement.hpp"

#include <algorithm>
#include <sstream>

#include "qlps/error.hpp"
#include "qlps/kernels.hpp"
#include "qlps/observables.hpp"

namespace qlps {

std::string Rng::serialize() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
}

Rng Rng::deserialize(const std::string& state) {
    Rng rng;
    std::istringstream is(state);
    is >> rng.engine_;
    if (is.fail()) throw InvalidArgument("malformed RNG state");
    return rng;
}

std::optional<std::size_t> pick_outcome(const std::vector<double>& probs, double u) {
    double total = 0.0;
    for (double p : probs) total += p;
    const double scale = total > 1.0 ? 1.0 / total : 1.0;

    double cumulative = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (!(probs[k] > 0.0)) continue;
        cumulative += probs[k] * scale;
        if (u < cumulative) return k;
    }
    // Rounding can leave the scaled cumulative a hair below 1; the draw then
    // belongs to the last particle with support, never to "none".
    if (total > 1.0) {
        for (std::size_t k = probs.size(); k-- > 0;)
            if (probs[k] > 0.0) return k;
    }
    return std::nullopt;
}

MeasurementOutcome sample_detection(const WaveFunction& psi, const Cell& cell, Rng& rng) {
    MeasurementOutcome out;
    out.cell = cell;
    out.probs = detection_probs(psi, cell);
    for (double& p : out.probs) p = std::clamp(p, 0.0, 1.0);
    out.detected = pick_outcome(out.probs, rng.uniform());
    return out;
}

void collapse_in_place(WaveFunction& psi, std::size_t k, const Cell& cell) {
    if (k >= psi.particles()) throw InvalidArgument("particle index out of range");
    if (!in_bounds(cell, psi.grid())) throw InvalidArgument("cell outside grid");
    if (!(marginal(psi, k).at(cell) > 0.0)) throw InvalidArgument("impossible collapse");

    const double removed =
        kernels::mask_particle(psi.amplitudes(), psi.grid(), psi.particles(), k, cell_slot(cell, psi.grid()));
    // Nothing outside the cell: the state already is the projection.
    if (removed == 0.0) return;
    normalize(psi);
}

WaveFunction collapse(const WaveFunction& psi, std::size_t k, const Cell& cell) {
    WaveFunction out = psi;
    collapse_in_place(out, k, cell);
    return out;
}

} // namespace qlps
