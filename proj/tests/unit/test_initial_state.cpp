#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qlps/error.hpp"
#include "qlps/initial_state.hpp"
#include "qlps/observables.hpp"
#include "oracles.hpp"

using namespace qlps;
using namespace qlps::testing;

TEST_CASE("wide Gaussian approaches a uniform marginal") {
    const GridSpec g{6, 5, 1.0, 1.0};
    const double sigma = 10.0 * 6.0;
    const auto psi = gaussian_product_state(g, unit_model(1), {GaussianSpec{{2.5, 2.0}, sigma, {}}});
    const auto m = marginal(psi, 0);
    const auto [lo, hi] = std::minmax_element(m.values.begin(), m.values.end());
    CHECK(*hi / *lo <= 1.05);
}

TEST_CASE("zero momentum gives real amplitudes") {
    const GridSpec g{5, 5, 1.0, 1.0};
    const auto psi = gaussian_product_state(g, unit_model(2),
                                            {GaussianSpec{{1.0, 2.0}, 0.8, {}}, GaussianSpec{{3.0, 3.0}, 1.5, {}}});
    for (const auto& a : psi.amplitudes()) CHECK(a.imag() == 0.0);
    CHECK(norm_squared(psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("amplitudes follow the Gaussian formula") {
    const GridSpec g{4, 3, 0.5, 2.0};
    ModelParams p = unit_model(1);
    p.hbar = 0.7;
    const GaussianSpec s{{1.1, 2.3}, 0.9, {0.4, -1.2}};
    const auto psi = gaussian_product_state(g, p, {s});
    std::vector<Complex> ref(g.cell_count());
    double n2 = 0.0;
    for (int ax = 0; ax < g.m; ++ax)
        for (int ay = 0; ay < g.n; ++ay) {
            const double x = ax * g.dx, y = ay * g.dy;
            const double r2 = (x - 1.1) * (x - 1.1) + (y - 2.3) * (y - 2.3);
            const Complex a = std::exp(-r2 / (4 * 0.81)) * std::polar(1.0, (0.4 * x - 1.2 * y) / 0.7);
            ref[cell_slot({ax, ay}, g)] = a;
            n2 += std::norm(a);
        }
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(psi[i] - ref[i] / std::sqrt(n2)) < 1e-14);
}

TEST_CASE("marginal peaks at the cell nearest each center") {
    const GridSpec g{8, 6, 1.0, 1.0};
    const std::vector<GaussianSpec> specs{{{1.2, 4.9}, 0.7, {}}, {{5.6, 0.8}, 1.0, {0.5, 0.5}}, {{3.4, 3.4}, 0.9, {}}};
    const std::vector<Cell> nearest{{1, 5}, {6, 1}, {3, 3}};
    const auto psi = gaussian_product_state(g, unit_model(3), specs);
    for (std::size_t k = 0; k < 3; ++k) {
        const auto m = marginal(psi, k);
        const auto it = std::max_element(m.values.begin(), m.values.end());
        const auto idx = static_cast<int>(it - m.values.begin());
        CHECK(Cell{idx % g.m, idx / g.m} == nearest[k]);
    }
}

TEST_CASE("initial state errors") {
    const GridSpec g{4, 4, 1.0, 1.0};
    CHECK_THROWS_AS(gaussian_product_state(g, unit_model(1), {GaussianSpec{{1, 1}, 0.0, {}}}), InvalidArgument);
    CHECK_THROWS_AS(gaussian_product_state(g, unit_model(2), {GaussianSpec{{1, 1}, 1.0, {}}}), InvalidArgument);
    CHECK_THROWS_AS(gaussian_product_state(g, unit_model(1), {GaussianSpec{{1e6, 1e6}, 0.1, {}}}), InvalidArgument);
    CHECK_THROWS_AS(product_state(g, {std::vector<Complex>(3)}), InvalidArgument);
}

TEST_CASE("delta and uniform states") {
    const GridSpec g{3, 2, 1.0, 1.0};
    const auto d = delta_state(g, {{2, 1}, {0, 1}});
    CHECK(d.at({{2, 1}, {0, 1}}) == Complex{1.0, 0.0});
    CHECK(norm_squared(d) == 1.0);
    const auto u = uniform_state(g, 2);
    for (const auto& a : u.amplitudes()) CHECK(a.real() == doctest::Approx(1.0 / 6.0));
}
