#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qlps/grid.hpp"

namespace qlps {

using Complex = std::complex<double>;

/// Joint amplitude over every configuration of N particles on the grid,
/// stored flat in config_index order.
class WaveFunction {
public:
    WaveFunction(const GridSpec& grid, std::size_t n_particles);
    WaveFunction(const GridSpec& grid, std::size_t n_particles, std::vector<Complex> amplitudes);

    const GridSpec& grid() const noexcept { return grid_; }
    std::size_t particles() const noexcept { return n_particles_; }
    std::size_t size() const noexcept { return amps_.size(); }

    std::span<Complex> amplitudes() noexcept { return amps_; }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }

    Complex& operator[](std::size_t i) noexcept { return amps_[i]; }
    const Complex& operator[](std::size_t i) const noexcept { return amps_[i]; }

    Complex& at(const Configuration& cfg);
    const Complex& at(const Configuration& cfg) const;

    bool all_finite() const noexcept;

    bool operator==(const WaveFunction&) const = default;

private:
    GridSpec grid_;
    std::size_t n_particles_;
    std::vector<Complex> amps_;
};

/// Sum |psi|^2 in a fixed, thread-count independent order.
double norm_squared(const WaveFunction& psi);

/// <a|b>, conjugating the first argument.
Complex inner_product(const WaveFunction& a, const WaveFunction& b);

/// Scales psi to unit norm in place. Throws InvalidArgument("null state") on zero norm.
void normalize(WaveFunction& psi);
WaveFunction normalized(WaveFunction psi);

} // namespace qlps
