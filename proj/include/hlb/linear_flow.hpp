#pragma once

#include <vector>

#include "hlb/halfline.hpp"
#include "hlb/space_time.hpp"
#include "hlb/spectral.hpp"

namespace hlb {

/// (u, u_t) at a common time.
struct PropagatorState {
    Field u;
    Field v;
};

/// Boundary traces sampled on a time grid, windowed by eta(t/T).
struct TracePair {
    BoundarySignal p1;
    BoundarySignal p2;
    double T = 0.0;
};

/// Dispersion relation sqrt(xi^2 + xi^4).
double dispersion(double xi);

/// Fused bounded multiplier i xi sin(t phi)/phi, zero at xi = 0.
cplx fused_velocity_multiplier(double xi, double t);

/// Free group acting on (u, u_t) in Fourier space.
PropagatorState free_propagate_state(const PropagatorState& s, double t);

/// W_R^t(f, g): solution with u(0) = f and u_t(0) = g_x.
Field free_propagate(const Field& f, const Field& g, double t);

/// W_R^t(f, g) at every time node of grid (f, g share its spatial axis).
SpaceTimeField free_flow_field(const Field& f, const Field& g, const GridSpec& grid);

/// Traces of W_R^t(f, g) at x = 0 on the grid's time nodes, times eta(t/T).
/// T <= 0 disables the window.
TracePair trace_at_zero(const Field& f, const Field& g, const GridSpec& times, double T);

/// (dtau/2pi sum <tau>^{2s} |hhat|^2)^{1/2} of periodic samples with step dt.
double temporal_sobolev_norm(const std::vector<cplx>& samples, double dt, double s);

/// ||eta(t) W_R^t(f,g)(0,.)||_{H^{(2s+1)/4}_t} / (||f||_{H^s} + ||g||_{H^{s-1}})
/// on the time axis of `times`, which should contain [-2, 2].
double kato_ratio(const Field& f, const Field& g, double s, const GridSpec& times);

/// Per-mode energy |vhat|^2 + (xi^2 + xi^4)|uhat|^2.
std::vector<double> mode_energy(const PropagatorState& s);

} // namespace hlb
