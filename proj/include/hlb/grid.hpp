#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

namespace hlb {

using cplx = std::complex<double>;

/// Tensor grid on [-L, L) x [t0, t0 + T_max).
///
/// Space: x_j = -L + j*dx, dx = 2L/nx, so x = 0 is node nx/2.
/// Frequencies are stored in FFT order; xi(k) maps slot k to k*dxi or
/// (k - nx)*dxi, with dxi = pi/L.
/// Time: t_n = t0 + n*dt, dt = t_max/nt (periodic convention used by the
/// temporal FFTs).
struct GridSpec {
    double L = 20.0;
    std::size_t nx = 256;
    double t_max = 1.0;
    std::size_t nt = 64;
    int pad_factor = 2;
    double t_origin = 0.0;

    /// Throws ConfigError when an invariant fails.
    void validate() const;

    double dx() const { return 2.0 * L / static_cast<double>(nx); }
    double dxi() const;
    double dt() const { return t_max / static_cast<double>(nt); }
    double x(std::size_t j) const { return -L + static_cast<double>(j) * dx(); }
    double t(std::size_t n) const { return t_origin + static_cast<double>(n) * dt(); }
    double xi(std::size_t k) const;
    std::size_t zero_index() const { return nx / 2; }
    /// Index of the Nyquist slot (frequency -nx/2 * dxi).
    std::size_t nyquist_index() const { return nx / 2; }

    bool operator==(const GridSpec&) const = default;
};

/// Japanese bracket sqrt(1 + xi^2).
inline double bracket(double xi) { return std::sqrt(1.0 + xi * xi); }

/// Signed FFT-order frequency index for slot k of an n-point transform.
inline long signed_index(std::size_t k, std::size_t n)
{
    return k < n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

} // namespace hlb
