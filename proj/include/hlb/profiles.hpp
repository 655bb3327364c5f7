#pragma once

#include <cstdint>
#include <functional>

#include "hlb/grid.hpp"

namespace hlb {

/// A exp(-((x - x0)/w)^2).
std::function<double(double)> gaussian_profile(double amplitude, double center, double width);

/// A exp(1 - 1/(1 - ((x - c)/r)^2)) on |x - c| < r, zero elsewhere; peak A at c.
std::function<double(double)> bump_profile(double amplitude, double center, double radius);

/// Windowed random-phase cosine series
///   A eta(x / (L/4)) sum_{k=1}^{K} <xi_k>^{-decay} cos(xi_k x + theta_k) sqrt(dxi),
/// xi_k = k pi / L, K = nx/2 - 1. Phase theta_k depends only on (seed, k), so
/// refining nx keeps the shared modes and adds new ones.
std::function<double(double)> rough_profile(const GridSpec& grid, double amplitude, double decay,
    std::uint64_t seed);

} // namespace hlb
