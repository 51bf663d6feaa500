#include "qlps/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlps::kernels {

namespace {

using Index = std::ptrdiff_t;

struct Layout {
    Index cells;   // m*n
    Index stride;  // (m*n)^(N-1-k)
    Index block;   // cells*stride
    Index blocks;  // total / block
};

Layout layout_for(const GridSpec& grid, std::size_t n_particles, std::size_t k, std::size_t total) {
    Layout l{};
    l.cells = static_cast<Index>(grid.cell_count());
    l.stride = 1;
    for (std::size_t j = k + 1; j < n_particles; ++j) l.stride *= l.cells;
    l.block = l.cells * l.stride;
    l.blocks = static_cast<Index>(total) / l.block;
    return l;
}

Index chunk_count(std::size_t n) {
    return static_cast<Index>((n + kReduceChunk - 1) / kReduceChunk);
}

// Adds particle k's neighbour couplings to out.
void add_neighbours(const StencilPlan& plan, std::size_t k, const Complex* in, Complex* out) {
    const GridSpec& g = plan.grid;
    const Layout l = layout_for(g, plan.particles(), k, plan.size());
    const double wx = plan.weights[k].wx;
    const double wy = plan.weights[k].wy;
    const Index m = g.m;
    const Index n = g.n;
    const Index s = l.stride;

#pragma omp parallel for collapse(2) schedule(static)
    for (Index b = 0; b < l.blocks; ++b) {
        for (Index ax = 0; ax < m; ++ax) {
            const Index base = b * l.block;
            const Index axp = ax + 1 == m ? 0 : ax + 1;
            const Index axm = ax == 0 ? m - 1 : ax - 1;
            for (Index ay = 0; ay < n; ++ay) {
                const Index ayp = ay + 1 == n ? 0 : ay + 1;
                const Index aym = ay == 0 ? n - 1 : ay - 1;
                Complex* o = out + base + (ax * n + ay) * s;
                const Complex* xp = in + base + (axp * n + ay) * s;
                const Complex* xm = in + base + (axm * n + ay) * s;
                const Complex* yp = in + base + (ax * n + ayp) * s;
                const Complex* ym = in + base + (ax * n + aym) * s;
                for (Index j = 0; j < s; ++j)
                    o[j] += wx * (xp[j] + xm[j]) + wy * (yp[j] + ym[j]);
            }
        }
    }
}

} // namespace

void apply_hamiltonian(const StencilPlan& plan, std::span<const Complex> in, std::span<Complex> out) {
    const Index total = static_cast<Index>(plan.size());
    const double* diag = plan.diagonal.data();
    const Complex* src = in.data();
    Complex* dst = out.data();

#pragma omp parallel for schedule(static)
    for (Index i = 0; i < total; ++i) dst[i] = diag[i] * src[i];

    for (std::size_t k = 0; k < plan.particles(); ++k) add_neighbours(plan, k, src, dst);
}

void apply_kinetic(const StencilPlan& plan, std::size_t k, std::span<const Complex> in, std::span<Complex> out) {
    const Index total = static_cast<Index>(plan.size());
    const double d = plan.weights[k].diagonal();
    const Complex* src = in.data();
    Complex* dst = out.data();

#pragma omp parallel for schedule(static)
    for (Index i = 0; i < total; ++i) dst[i] = d * src[i];

    add_neighbours(plan, k, src, dst);
}

double euler_update(std::span<Complex> psi, std::span<const Complex> h_psi, double scale) {
    const std::size_t n = psi.size();
    const Index chunks = chunk_count(n);
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
    Complex* p = psi.data();
    const Complex* h = h_psi.data();

#pragma omp parallel for schedule(static)
    for (Index c = 0; c < chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReduceChunk;
        const std::size_t end = std::min(n, begin + kReduceChunk);
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            // p - i*scale*h
            const Complex v{p[i].real() + scale * h[i].imag(), p[i].imag() - scale * h[i].real()};
            p[i] = v;
            acc += std::norm(v);
        }
        partial[static_cast<std::size_t>(c)] = acc;
    }

    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

double norm_squared(std::span<const Complex> v) {
    const std::size_t n = v.size();
    const Index chunks = chunk_count(n);
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);

#pragma omp parallel for schedule(static)
    for (Index c = 0; c < chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReduceChunk;
        const std::size_t end = std::min(n, begin + kReduceChunk);
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += std::norm(v[i]);
        partial[static_cast<std::size_t>(c)] = acc;
    }

    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    const std::size_t n = a.size();
    const Index chunks = chunk_count(n);
    std::vector<Complex> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(static)
    for (Index c = 0; c < chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReduceChunk;
        const std::size_t end = std::min(n, begin + kReduceChunk);
        Complex acc{};
        for (std::size_t i = begin; i < end; ++i) acc += std::conj(a[i]) * b[i];
        partial[static_cast<std::size_t>(c)] = acc;
    }

    Complex total{};
    for (const Complex& p : partial) total += p;
    return total;
}

void scale(std::span<Complex> v, double factor) {
    const Index n = static_cast<Index>(v.size());
    Complex* p = v.data();
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) p[i] *= factor;
}

std::vector<double> marginal(std::span<const Complex> psi, const GridSpec& grid, std::size_t n_particles, std::size_t k) {
    const Layout l = layout_for(grid, n_particles, k, psi.size());
    std::vector<double> out(static_cast<std::size_t>(l.cells), 0.0);
    const Complex* p = psi.data();

    // Each slot is summed by one thread in a fixed order.
#pragma omp parallel for schedule(static)
    for (Index slot = 0; slot < l.cells; ++slot) {
        double acc = 0.0;
        for (Index b = 0; b < l.blocks; ++b) {
            const Complex* row = p + b * l.block + slot * l.stride;
            for (Index j = 0; j < l.stride; ++j) acc += std::norm(row[j]);
        }
        out[static_cast<std::size_t>(slot)] = acc;
    }
    return out;
}

double mask_particle(std::span<Complex> psi, const GridSpec& grid, std::size_t n_particles, std::size_t k, std::size_t slot) {
    const Layout l = layout_for(grid, n_particles, k, psi.size());
    std::vector<double> partial(static_cast<std::size_t>(l.blocks), 0.0);
    Complex* p = psi.data();
    const Index keep = static_cast<Index>(slot);

#pragma omp parallel for schedule(static)
    for (Index b = 0; b < l.blocks; ++b) {
        double acc = 0.0;
        for (Index s = 0; s < l.cells; ++s) {
            if (s == keep) continue;
            Complex* row = p + b * l.block + s * l.stride;
            for (Index j = 0; j < l.stride; ++j) {
                acc += std::norm(row[j]);
                row[j] = Complex{};
            }
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }

    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace reference {

namespace {

Complex neighbour_sum(const StencilPlan& plan, std::size_t k, const Configuration& cfg, std::span<const Complex> in) {
    const GridSpec& g = plan.grid;
    const std::size_t n_particles = plan.particles();
    Configuration nb = cfg;
    Complex acc{};
    const int shifts[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& s : shifts) {
        nb[k] = wrap(cfg[k].ax + s[0], cfg[k].ay + s[1], g);
        const double w = s[0] != 0 ? plan.weights[k].wx : plan.weights[k].wy;
        acc += w * in[config_index(nb, g, n_particles)];
    }
    return acc;
}

} // namespace

void apply_hamiltonian(const StencilPlan& plan, std::span<const Complex> in, std::span<Complex> out) {
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const Configuration cfg = config_from_index(i, plan.grid, plan.particles());
        Complex acc = plan.diagonal[i] * in[i];
        for (std::size_t k = 0; k < plan.particles(); ++k) acc += neighbour_sum(plan, k, cfg, in);
        out[i] = acc;
    }
}

void apply_kinetic(const StencilPlan& plan, std::size_t k, std::span<const Complex> in, std::span<Complex> out) {
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const Configuration cfg = config_from_index(i, plan.grid, plan.particles());
        out[i] = plan.weights[k].diagonal() * in[i] + neighbour_sum(plan, k, cfg, in);
    }
}

double norm_squared(std::span<const Complex> v) {
    double acc = 0.0;
    for (const Complex& c : v) acc += std::norm(c);
    return acc;
}

std::vector<double> marginal(std::span<const Complex> psi, const GridSpec& grid, std::size_t n_particles, std::size_t k) {
    std::vector<double> out(grid.cell_count(), 0.0);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const Configuration cfg = config_from_index(i, grid, n_particles);
        out[cell_slot(cfg[k], grid)] += std::norm(psi[i]);
    }
    return out;
}

} // namespace reference

} // namespace qlps::kernels
