#include "qlps/cli/render.hpp"

#include <algorithm>
#include <cmath>

#include "qlps/error.hpp"

namespace qlps {

std::uint8_t channel_level(double p, double max, double gamma) {
    if (!(max > 0.0) || !(p > 0.0)) return 0;
    const double level = std::round(255.0 * std::pow(std::min(p / max, 1.0), gamma));
    return static_cast<std::uint8_t>(level);
}

Image render_frame_image(std::span<const Marginal2D> marginals, std::span<const Channel> channels, double gamma) {
    if (marginals.empty()) throw InvalidArgument("nothing to render");
    if (marginals.size() != channels.size()) throw InvalidArgument("one channel per marginal required");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in (0, 1]");
    const GridSpec& g = marginals.front().grid;
    bool used[3] = {false, false, false};
    for (std::size_t i = 0; i < marginals.size(); ++i) {
        if (!(marginals[i].grid == g)) throw InvalidArgument("marginals do not share a grid");
        if (channels[i] == Channel::none) continue;
        const auto c = static_cast<std::size_t>(channels[i]);
        if (used[c]) throw InvalidArgument("two particles mapped to the same color channel");
        used[c] = true;
    }

    Image img{g.m, g.n, std::vector<std::uint8_t>(3 * g.cell_count(), 0)};
    for (std::size_t i = 0; i < marginals.size(); ++i) {
        if (channels[i] == Channel::none) continue;
        const auto c = static_cast<std::size_t>(channels[i]);
        const double max = marginals[i].max();
        for (std::size_t cell = 0; cell < g.cell_count(); ++cell)
            img.rgb[3 * cell + c] = channel_level(marginals[i].values[cell], max, gamma);
    }
    return img;
}

Image render_frame_image(std::span<const Marginal2D> marginals, double gamma) {
    if (marginals.size() > 3) throw InvalidArgument("at most three marginals can be rendered");
    static constexpr Channel rgb[3] = {Channel::red, Channel::green, Channel::blue};
    return render_frame_image(marginals, std::span<const Channel>(rgb, marginals.size()), gamma);
}

void write_ppm(std::ostream& out, const Image& image) {
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.rgb.data()), static_cast<std::streamsize>(image.rgb.size()));
}

} // namespace qlps
