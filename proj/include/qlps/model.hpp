#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qlps/grid.hpp"

namespace qlps {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

double distance(const Point2& a, const Point2& b) noexcept;

enum class Channel { red, green, blue, none };

std::string_view to_string(Channel c) noexcept;
/// Throws InvalidArgument for unknown names.
Channel channel_from_string(std::string_view name);

struct ParticleSpec {
    double mass = 1.0;
    double spring_k = 1.0;
    Channel display_channel = Channel::none;

    bool operator==(const ParticleSpec&) const = default;
};

/// raw: coordinates enter the potential as-is, so the potential jumps at the periodic seam.
/// minimal_image: each particle is first moved to its periodic image nearest particle 0.
enum class PotentialMode { raw, minimal_image };

std::string_view to_string(PotentialMode mode) noexcept;
PotentialMode potential_mode_from_string(std::string_view name);

struct ModelParams {
    double hbar = 1.0;
    std::vector<ParticleSpec> particles;
    PotentialMode potential_mode = PotentialMode::raw;

    std::size_t size() const noexcept { return particles.size(); }

    /// Sum of spring constants. Always recomputed.
    double total_spring() const noexcept;

    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

/// Spring-weighted mean of the particle coordinates. Throws InvalidArgument
/// ("degenerate binding") when the total spring constant is zero.
Point2 center_of_force(const Configuration& cfg, const GridSpec& grid, const ModelParams& params);

/// Sum_i (k_i/2)|q_i - q_c|^2. Zero for a single particle.
double potential_at(const Configuration& cfg, const GridSpec& grid, const ModelParams& params);

} // namespace qlps
