#pragma once

#include <cstddef>
#include <vector>

namespace hlb {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Weights for int_0^{(n-1) h} on n equispaced samples: composite Simpson,
/// with a closing 3/8 panel when the interval count is odd and the
/// trapezoid rule for a single interval.
std::vector<double> simpson_weights(std::size_t n, double h);

/// Trapezoid weights with fourth-order Gregory end corrections
/// (3/8, 7/6, 23/24 at each end). Unlike Simpson the interior weights are
/// constant, so sums against exp(-i z t) have no spurious copy at
/// z = pi/h. Needs n >= 6.
std::vector<double> gregory_weights(std::size_t n, double h);

/// Composite 16-point Gauss-Legendre on `panels` equal panels of [a, b].
QuadratureRule gauss_legendre_panels(double a, double b, std::size_t panels);

} // namespace hlb
