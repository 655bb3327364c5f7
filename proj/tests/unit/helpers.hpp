#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hlb/spectral.hpp"

namespace hlb::testing {

/// Real field with a handful of random modes |xi| <= xi_max, tapered by a
/// Gaussian so it decays at x = +-L.
inline Field random_smooth_field(const GridSpec& g, std::uint64_t seed, double xi_max = 4.0)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0), k(0.0, xi_max),
        ph(0.0, 2.0 * std::numbers::pi), c(-2.0, 2.0);
    struct Mode {
        double a, k, p;
    };
    std::vector<Mode> modes(5);
    for (auto& m : modes)
        m = {amp(rng), k(rng), ph(rng)};
    const double centre = c(rng);
    return Field::sample(g, [=](double x) {
        double acc = 0.0;
        for (const auto& m : modes)
            acc += m.a * std::cos(m.k * x + m.p);
        const double y = (x - centre) / (0.15 * g.L);
        return acc * std::exp(-y * y);
    });
}

/// Random spectrum supported on |xi| < xi_max (Hermitian, so the field is real).
inline Field random_band_limited(const GridSpec& g, std::uint64_t seed, double xi_max)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    Spectrum F{g, std::vector<cplx>(g.nx)};
    for (std::size_t k = 1; k < g.nx / 2; ++k) {
        if (g.xi(k) >= xi_max)
            break;
        const cplx c{n(rng), n(rng)};
        F.coeffs[k] = c;
        F.coeffs[g.nx - k] = std::conj(c);
    }
    F.coeffs[0] = n(rng);
    return inverse_transform(F, true);
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace hlb::testing
