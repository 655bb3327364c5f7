#pragma once

#include <functional>

#include "hlb/space_time.hpp"

namespace hlb {

/// Uniform nodes x_i = i dx on [0, X_max], dx = X_max / (M_x - 1).
struct FDGrid {
    double X_max = 40.0;
    std::size_t M_x = 801;
    double dt = 1e-3;
    /// Sponge width in nodes at the right end.
    std::size_t damping_width = 40;
    double damping_strength = 20.0;
    double dx() const { return X_max / static_cast<double>(M_x - 1); }
    /// Throws ConfigError for invalid sizes or a time step above
    /// kStabilityConstant dx^2.
    void validate() const;
};

/// Leapfrog with the 5-point fourth difference is stable for
/// dt <= dx^2 / 2; this margin was set by the stability sweep in the tests.
inline constexpr double kStabilityConstant = 0.45;

/// Data as callables so the oracle samples them on its own nodes.
struct FDProblem {
    std::function<double(double)> f;      ///< u(x, 0)
    std::function<double(double)> u_t0;   ///< u_t(x, 0) = g_x(x)
    std::function<double(double)> h1;     ///< u(0, t)
    std::function<double(double)> h2;     ///< u_x(0, t)
    /// Optional source term added to u_tt (manufactured solutions only).
    std::function<double(double, double)> forcing;
    /// Coefficient of (u^2)_xx; 1 for the nonlinear equation, 0 for the linear one.
    double nonlinear = 1.0;
};

/// Grid whose nodes contain the x >= 0 nodes of `out` (dx = out.dx() / refine)
/// and whose step divides out.dt().
FDGrid fd_grid_for(const GridSpec& out, double X_max, std::size_t refine,
    double courant = 0.4, std::size_t damping_width = 40);

/// Advances u_tt = u_xx - u_xxxx - (u^2)_xx + F by leapfrog; u(0) = h1 and
/// the ghost u(-dx) = u(dx) - 2 dx h2 close the left end. Returns u sampled
/// at the nodes of `out` with 0 <= x <= X_max (zero elsewhere), for the time
/// nodes of `out`. Throws StabilityViolation if max|u| passes 1e6.
SpaceTimeField fd_solve(const FDProblem& problem, const FDGrid& grid, const GridSpec& out);

/// Discrete 1/2 sum dx (u_t^2 + u_x^2 + u_xx^2) of the linear equation,
/// sampled at the time nodes of `out`; uses the raw FD state.
std::vector<double> fd_linear_energy(const FDProblem& problem, const FDGrid& grid, const GridSpec& out,
    double x_hi);

} // namespace hlb
