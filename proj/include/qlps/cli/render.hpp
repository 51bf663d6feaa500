#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "qlps/model.hpp"
#include "qlps/observables.hpp"

namespace qlps {

/// 8-bit RGB raster, row-major: pixel (ax, ay) at offset 3*(ay*width + ax).
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    std::array<std::uint8_t, 3> pixel(int ax, int ay) const {
        const std::size_t o = 3 * (static_cast<std::size_t>(ay) * width + ax);
        return {rgb[o], rgb[o + 1], rgb[o + 2]};
    }
};

/// One channel value: round(255 * (p / max)^gamma), 0 when max is 0.
std::uint8_t channel_level(double p, double max, double gamma);

/// Colors each cell by mixing one primary per particle. Each channel is scaled by
/// that particle's own maximum. Particles on Channel::none are not drawn.
Image render_frame_image(std::span<const Marginal2D> marginals, std::span<const Channel> channels, double gamma);

/// Red, green, blue for the first three marginals.
Image render_frame_image(std::span<const Marginal2D> marginals, double gamma);

/// Binary P6.
void write_ppm(std::ostream& out, const Image& image);

} // namespace qlps
