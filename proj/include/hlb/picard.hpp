#pragma once

#include <vector>

#include "hlb/boundary.hpp"
#include "hlb/diagnostics.hpp"
#include "hlb/halfline.hpp"
#include "hlb/space_time.hpp"

namespace hlb {

/// Initial data f, g on the half-line and boundary data h1 = u(0, t),
/// h2 = u_x(0, t). The time axis of the solve is f.grid's (t_origin 0).
struct IBVPData {
    HalfLineFunction f;
    HalfLineFunction g;
    BoundarySignal h1;
    BoundarySignal h2;
    double s = 0.0;
    ExtensionMethod extension = ExtensionMethod::smooth_decay_reflection;

    const GridSpec& grid() const { return f.grid; }
    /// Shapes, finiteness and compatibility at the declared s.
    void validate() const;
};

struct SolverConfig {
    double b = 0.45;
    /// Initial window; 0 selects t_max / 2 so eta(t/T) spans the time axis.
    double T_init = 0.0;
    double theta = 0.5;
    std::size_t max_iters = 40;
    double fp_tol = 1e-9;
    /// Smoothing exponent; checked against the admissible range when
    /// smoothing diagnostics are requested.
    double a = 0.0;
    bool smoothing = false;
    /// Set false to drop the nonlinearity (linear-regime checks).
    bool nonlinear = true;
    BoundaryKernelConfig kernel{};
    void validate(double s) const;
};

struct SolutionBundle {
    /// Full-line representative and its restriction (x < 0 entries zero).
    SpaceTimeField u;
    SpaceTimeField u_restricted;
    /// eta W_R(f^e, g^e) + eta W_0(h - p): the linear IBVP solution.
    SpaceTimeField linear_part;
    double T = 0.0;
    double s = 0.0;
    DiagnosticsReport diagnostics;
};

/// Pieces of Phi that do not depend on u, computed once per window T.
struct PhiCache {
    double T = 0.0;
    SpaceTimeField free_part;     ///< eta W_R(f^e, g^e)
    SpaceTimeField boundary_part; ///< eta W_0(h1 - p1, h2 - p2)
    KernelResolution resolution;
};

PhiCache build_phi_cache(const IBVPData& data, const SolverConfig& cfg, double T);

/// Phi(u) = eta W_R(f^e, g^e) + eta int_0^t W_{R,2} (-G(u)) + eta W_0(h - p - q).
/// The Duhamel forcing is -G so that fixed points solve
/// u_tt - u_xx + u_xxxx + (u^2)_xx = 0.
SpaceTimeField phi_map(const SpaceTimeField& u, const IBVPData& data, const SolverConfig& cfg,
    const PhiCache& cache);
SpaceTimeField phi_map(const SpaceTimeField& u, const IBVPData& data, const SolverConfig& cfg, double T);

/// Picard iteration with T-halving. Series in the report: diff_norm,
/// contraction_factor, window_T (one entry per iteration, across restarts).
SolutionBundle solve(const IBVPData& data, const SolverConfig& cfg);

/// t -> ||u(t) - linear_part(t)||_{H^{s+a}} on the time nodes with t <= T.
std::vector<double> smoothing_residual(const SolutionBundle& bundle, double a);

/// Largest a admitted by the smoothing estimate: min{1/2, s + 1/2, 5/2 - s}.
double smoothing_bound(double s);

/// Field with every x < 0 entry set to zero.
SpaceTimeField restrict_field(const SpaceTimeField& u);

} // namespace hlb
