#include "qlps/initial_state.hpp"

#include <cmath>
#include <string>

#include "qlps/error.hpp"

namespace qlps {

WaveFunction product_state(const GridSpec& grid, const std::vector<std::vector<Complex>>& factors) {
    grid.validate();
    const std::size_t cells = grid.cell_count();
    for (const auto& f : factors)
        if (f.size() != cells) throw InvalidArgument("product factor must have m*n entries");

    WaveFunction psi(grid, factors.size());
    auto amps = psi.amplitudes();
    const std::size_t total = amps.size();
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rest = i;
        Complex v{1.0, 0.0};
        for (std::size_t k = factors.size(); k-- > 0;) {
            v *= factors[k][rest % cells];
            rest /= cells;
        }
        amps[i] = v;
    }
    normalize(psi);
    return psi;
}

WaveFunction gaussian_product_state(const GridSpec& grid, const ModelParams& params,
                                    const std::vector<GaussianSpec>& specs) {
    grid.validate();
    params.validate();
    if (specs.size() != params.size())
        throw InvalidArgument("initial state needs one entry per particle (" + std::to_string(params.size()) + ")");

    std::vector<std::vector<Complex>> factors;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& s = specs[i];
        if (!(s.width > 0.0) || !std::isfinite(s.width))
            throw InvalidArgument("initial[" + std::to_string(i) + "].width must be positive");
        std::vector<Complex> f(grid.cell_count());
        double n2 = 0.0;
        for (int ax = 0; ax < grid.m; ++ax) {
            for (int ay = 0; ay < grid.n; ++ay) {
                const double x = ax * grid.dx;
                const double y = ay * grid.dy;
                const double r2 = (x - s.center.x) * (x - s.center.x) + (y - s.center.y) * (y - s.center.y);
                const double envelope = std::exp(-r2 / (4.0 * s.width * s.width));
                const double phase = (s.momentum.x * x + s.momentum.y * y) / params.hbar;
                const Complex v = envelope * Complex{std::cos(phase), std::sin(phase)};
                f[cell_slot({ax, ay}, grid)] = v;
                n2 += std::norm(v);
            }
        }
        if (!(n2 > 0.0))
            throw InvalidArgument("initial[" + std::to_string(i) + "] vanishes on every grid point");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& v : f) v *= inv;
        factors.push_back(std::move(f));
    }
    return product_state(grid, factors);
}

WaveFunction delta_state(const GridSpec& grid, const Configuration& cfg) {
    WaveFunction psi(grid, cfg.size());
    psi.at(cfg) = Complex{1.0, 0.0};
    return psi;
}

WaveFunction uniform_state(const GridSpec& grid, std::size_t n_particles) {
    WaveFunction psi(grid, n_particles);
    for (auto& a : psi.amplitudes()) a = Complex{1.0, 0.0};
    normalize(psi);
    return psi;
}

} // namespace qlps
