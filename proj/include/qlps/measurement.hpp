#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qlps/wavefunction.hpp"

namespace qlps {

/// Seedable 64-bit stream with a portable, serializable state.
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard; uniform() takes the top 53 bits so doubles are portable too.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::string serialize() const;
    /// Throws InvalidArgument on malformed state text.
    static Rng deserialize(const std::string& state);

    bool operator==(const Rng& other) const { return engine_ == other.engine_; }

private:
    std::mt19937_64 engine_;
};

struct MeasurementOutcome {
    Cell cell;
    std::vector<double> probs;
    std::optional<std::size_t> detected;

    bool operator==(const MeasurementOutcome&) const = default;
};

/// Draws which particle (if any) a detector at `cell` fires for. With S the
/// sum of per-particle probabilities, "none" has weight max(0, 1 - S); when
/// S > 1 the weights are rescaled by 1/S. Consumes exactly one uniform draw.
/// psi is not modified.
MeasurementOutcome sample_detection(const WaveFunction& psi, const Cell& cell, Rng& rng);

/// Outcome selection from given probabilities, exposed for testing.
std::optional<std::size_t> pick_outcome(const std::vector<double>& probs, double u);

/// Projects particle k onto `cell` and renormalizes. Throws InvalidArgument
/// ("impossible collapse") if the particle has zero probability there.
WaveFunction collapse(const WaveFunction& psi, std::size_t k, const Cell& cell);
void collapse_in_place(WaveFunction& psi, std::size_t k, const Cell& cell);

} // namespace qlps
