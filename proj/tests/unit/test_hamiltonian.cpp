#include <doctest.h>

#include <cmath>

#include "qlps/error.hpp"
#include "qlps/hamiltonian.hpp"
#include "qlps/initial_state.hpp"
#include "qlps/stepper.hpp"
#include "oracles.hpp"

using namespace qlps;
using namespace qlps::testing;

TEST_CASE("kinetic operator annihilates a uniform state") {
    const GridSpec g{4, 3, 0.8, 1.1};
    const auto psi = uniform_state(g, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto t = apply_kinetic(psi, k, unit_model(2));
        for (const auto& a : t.amplitudes()) CHECK(std::abs(a) < 1e-14);
    }
}

TEST_CASE("kinetic stencil applied to a delta") {
    const GridSpec g{4, 4, 1.0, 1.0};
    const Configuration at{{1, 2}, {3, 0}};
    const auto psi = delta_state(g, at);
    const std::size_t k = 1;
    const auto t = apply_kinetic(psi, k, unit_model(2));

    // (1/2)(2/dx^2 + 2/dy^2) on the diagonal, -1/2 on the four periodic neighbours of particle 1.
    CHECK(t.at(at).real() == doctest::Approx(2.0));
    std::vector<Configuration> neighbours;
    for (const auto& c : {Cell{0, 0}, Cell{2, 0}, Cell{3, 1}, Cell{3, 3}}) neighbours.push_back({{1, 2}, c});
    double off = 0.0;
    for (const auto& nb : neighbours) {
        CHECK(t.at(nb).real() == doctest::Approx(-0.5));
        off += std::abs(t.at(nb));
    }
    double total = 0.0;
    for (const auto& a : t.amplitudes()) total += std::abs(a);
    CHECK(total == doctest::Approx(2.0 + off));
    CHECK(psi.at(at) == Complex{1.0, 0.0});
}

TEST_CASE("plane wave in one particle's x index is an exact eigenvector") {
    const GridSpec g{5, 3, 0.9, 1.2};
    ModelParams p = unit_model(2);
    p.hbar = 1.3;
    p.particles[1].mass = 0.7;
    const std::size_t k = 1;
    const double pi = std::acos(-1.0);

    std::mt19937_64 rng(11);
    std::vector<Complex> other = random_factor(g, rng);
    std::vector<Complex> wave(g.cell_count());
    for (int ax = 0; ax < g.m; ++ax)
        for (int ay = 0; ay < g.n; ++ay) wave[cell_slot({ax, ay}, g)] = std::polar(1.0, 2.0 * pi * ax / g.m);
    const auto psi = product_state(g, {other, wave});

    const double eigen = (p.hbar * p.hbar / (2.0 * 0.7)) * (2.0 - 2.0 * std::cos(2.0 * pi / g.m)) / (g.dx * g.dx);
    const auto t = apply_kinetic(psi, k, p);
    for (std::size_t i = 0; i < psi.size(); ++i) CHECK(std::abs(t[i] - eigen * psi[i]) < 1e-13);
}

TEST_CASE("Hamiltonian of a single uniform particle vanishes") {
    const GridSpec g{3, 4, 1.0, 1.0};
    const auto h = apply_hamiltonian(uniform_state(g, 1), unit_model(1));
    for (const auto& a : h.amplitudes()) CHECK(std::abs(a) < 1e-14);
}

TEST_CASE("Hamiltonian on a coincident delta equals the kinetic part") {
    const GridSpec g{4, 4, 1.0, 1.0};
    const auto params = unit_model(3, 1.7);
    const auto psi = delta_state(g, {{2, 1}, {2, 1}, {2, 1}});
    const auto h = apply_hamiltonian(psi, params);
    WaveFunction kin(g, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        const auto t = apply_kinetic(psi, k, params);
        for (std::size_t i = 0; i < psi.size(); ++i) kin[i] += t[i];
    }
    // Potential is nonzero at neighbouring configurations but only multiplies psi, which is zero there.
    CHECK(max_abs_diff(h, kin) < 1e-14);
}

TEST_CASE("apply_hamiltonian matches the brute-force matrix") {
    for (auto mode : {PotentialMode::raw, PotentialMode::minimal_image}) {
        const GridSpec g{4, 3, 0.7, 1.2};
        ModelParams p = unit_model(2);
        p.hbar = 0.9;
        p.particles[0] = {1.3, 0.5, Channel::red};
        p.particles[1] = {0.6, 2.0, Channel::green};
        p.potential_mode = mode;
        const Eigen::MatrixXcd dense = brute_force_hamiltonian(g, p);
        CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto psi = random_state(g, 2, seed);
            const Eigen::VectorXcd expected = dense * as_vector(psi);
            const auto got = apply_hamiltonian(psi, p);
            CHECK(max_abs_diff(got, from_vector(g, 2, expected)) < 1e-12);
        }
    }
}

TEST_CASE("Hamiltonian is Hermitian and linear on random states") {
    const GridSpec g{3, 3, 1.0, 1.0};
    const auto p = unit_model(2);
    const Hamiltonian h(g, p);
    const double bound = energy_bound(g, p);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto psi = random_state(g, 2, 2 * s, false);
        const auto phi = random_state(g, 2, 2 * s + 1, false);
        const Complex lhs = inner_product(phi, h.apply(psi));
        const Complex rhs = std::conj(inner_product(psi, h.apply(phi)));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::sqrt(norm_squared(phi) * norm_squared(psi)) * bound);

        const Complex a{0.3, -1.2}, b{-0.7, 0.4};
        WaveFunction mix(g, 2);
        for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = a * psi[i] + b * phi[i];
        const auto h_mix = h.apply(mix);
        const auto h_psi = h.apply(psi);
        const auto h_phi = h.apply(phi);
        double worst = 0.0;
        for (std::size_t i = 0; i < mix.size(); ++i)
            worst = std::max(worst, std::abs(h_mix[i] - (a * h_psi[i] + b * h_phi[i])));
        CHECK(worst <= 1e-12 * bound);
    }
}

TEST_CASE("kinetic index errors and input immutability") {
    const GridSpec g{3, 3, 1.0, 1.0};
    const auto psi = random_state(g, 2, 5);
    const auto copy = psi;
    CHECK_THROWS_AS(apply_kinetic(psi, 2, unit_model(2)), InvalidArgument);
    (void)apply_hamiltonian(psi, unit_model(2));
    (void)apply_kinetic(psi, 0, unit_model(2));
    CHECK(psi == copy);
}
