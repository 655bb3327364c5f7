#pragma once

namespace hlb {

/// C-infinity step: 0 for u <= 0, 1 for u >= 1, built from exp(-1/u).
double smooth_step(double u);

/// Bump with eta = 1 on [-1, 1] and support in [-2, 2].
double eta(double t);

/// Cutoff with rho = 1 on [0, inf) and support in [-1, inf).
double rho(double y);

} // namespace hlb
