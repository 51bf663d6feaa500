#include "qlps/observables.hpp"

#include <algorithm>
#include <string>

#include "qlps/error.hpp"
#include "qlps/kernels.hpp"

namespace qlps {

double Marginal2D::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double Marginal2D::max() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

namespace {

void check_particle(const WaveFunction& psi, std::size_t k) {
    if (k >= psi.particles()) throw InvalidArgument("particle index " + std::to_string(k) + " out of range");
}

} // namespace

Marginal2D marginal(const WaveFunction& psi, std::size_t k) {
    check_particle(psi, k);
    const GridSpec& g = psi.grid();
    const auto by_slot = kernels::marginal(psi.amplitudes(), g, psi.particles(), k);
    Marginal2D out{g, std::vector<double>(g.cell_count())};
    for (int ax = 0; ax < g.m; ++ax)
        for (int ay = 0; ay < g.n; ++ay)
            out.values[static_cast<std::size_t>(ay) * g.m + ax] = by_slot[cell_slot({ax, ay}, g)];
    return out;
}

std::vector<Marginal2D> all_marginals(const WaveFunction& psi) {
    std::vector<Marginal2D> out;
    out.reserve(psi.particles());
    for (std::size_t k = 0; k < psi.particles(); ++k) out.push_back(marginal(psi, k));
    return out;
}

std::vector<double> detection_probs(const WaveFunction& psi, const Cell& cell) {
    if (!in_bounds(cell, psi.grid())) throw InvalidArgument("cell outside grid");
    std::vector<double> probs(psi.particles());
    for (std::size_t k = 0; k < psi.particles(); ++k) probs[k] = marginal(psi, k).at(cell);
    return probs;
}

double kinetic_energy(const WaveFunction& psi, std::size_t k, const Hamiltonian& h) {
    check_particle(psi, k);
    const WaveFunction t_psi = h.apply_kinetic(psi, k);
    return inner_product(psi, t_psi).real();
}

double kinetic_energy(const WaveFunction& psi, std::size_t k, const ModelParams& params) {
    check_particle(psi, k);
    return kinetic_energy(psi, k, Hamiltonian(psi.grid(), params));
}

double total_energy(const WaveFunction& psi, const Hamiltonian& h) {
    const WaveFunction h_psi = h.apply(psi);
    return inner_product(psi, h_psi).real();
}

double total_energy(const WaveFunction& psi, const ModelParams& params) {
    return total_energy(psi, Hamiltonian(psi.grid(), params));
}

Point2 expected_position(const Marginal2D& p) {
    const GridSpec& g = p.grid;
    Point2 e;
    for (int ay = 0; ay < g.n; ++ay) {
        for (int ax = 0; ax < g.m; ++ax) {
            const double w = p.at(ax, ay);
            e.x += w * ax * g.dx;
            e.y += w * ay * g.dy;
        }
    }
    return e;
}

Point2 expected_position(const WaveFunction& psi, std::size_t k) {
    return expected_position(marginal(psi, k));
}

} // namespace qlps
