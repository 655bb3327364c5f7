#pragma once

#include <functional>
#include <vector>

#include "hlb/diagnostics.hpp"
#include "hlb/halfline.hpp"
#include "hlb/space_time.hpp"

namespace hlb {

struct BoundaryKernelConfig {
    /// Truncation [-Omega, Omega] of the omega integrals; 0 selects it from
    /// the decay of hhat (tail below tail_tol of the peak).
    double omega_cutoff = 0.0;
    /// Upper bound for the adaptive cutoff; the time step additionally
    /// caps Omega so that z(Omega) stays below 0.9 pi/dt.
    double omega_max = 40.0;
    /// Gauss-Legendre node count; 0 selects it from the phase rate.
    std::size_t n_quad = 0;
    double tail_tol = 1e-10;
    /// Compare against a run with doubled nodes.
    bool check_convergence = true;
    double convergence_tol = 1e-6;
    /// Cutoff rho with rho = 1 on [0, inf) and support in [-1, inf).
    std::function<double(double)> rho;
};

/// Which of the four integrals to include.
enum class BoundaryTerms { all, decaying, oscillatory };

/// Transform of chi h at z = omega sqrt(omega^2 + 1), by an
/// endpoint-corrected trapezoid sum over the signal's own time grid.
cplx hat_on_curve(const BoundarySignal& h, double omega);
std::vector<cplx> hat_on_curve(const BoundarySignal& h, const std::vector<double>& omegas);
/// Transform of chi h at an arbitrary real frequency z.
std::vector<cplx> hat_at(const BoundarySignal& h, const std::vector<double>& z);

/// Decaying characteristic roots of lambda^2 - w^2 + w^4 = 0.
struct MellinKernel {
    static cplx root_a(cplx lambda);
    static cplx root_b(cplx lambda);
};

/// Resolved quadrature parameters, reported for manifests.
struct KernelResolution {
    double omega_cutoff = 0.0;
    std::size_t n_quad = 0;
};

KernelResolution choose_resolution(const BoundarySignal& h1, const BoundarySignal& h2,
    double x_extent, double t_extent, double dt, const BoundaryKernelConfig& cfg);

/// v(x, t) of the zero-initial-data problem with v(0,t) = h1, v_x(0,t) = h2,
/// on every node of grid.
SpaceTimeField boundary_evolution(const BoundarySignal& h1, const BoundarySignal& h2,
    const GridSpec& grid, const BoundaryKernelConfig& cfg = {},
    BoundaryTerms terms = BoundaryTerms::all, KernelResolution* used = nullptr);

/// Quadrature values at arbitrary points: rows follow ts, columns follow xs.
/// t_order differentiates in t; x_order = 1 requires every x >= 0.
std::vector<std::vector<cplx>> boundary_values(const BoundarySignal& h1, const BoundarySignal& h2,
    const std::vector<double>& xs, const std::vector<double>& ts, const KernelResolution& res,
    const BoundaryKernelConfig& cfg = {}, int t_order = 0, int x_order = 0,
    BoundaryTerms terms = BoundaryTerms::all);

/// The oscillatory pair evaluated as a Fourier multiplier flow on the grid's
/// frequencies (periodic in x).
SpaceTimeField cd_multiplier_flow(const BoundarySignal& h1, const BoundarySignal& h2,
    const GridSpec& grid);

struct MellinConfig {
    double mu_cutoff = 0.0;
    std::size_t n_quad = 0;
    double convergence_tol = 1e-6;
};

/// v(x, t) by inverting the Laplace-domain solution along the imaginary
/// axis, lambda = i mu sqrt(mu^2 + 1). Requires x > 0, t > 0.
double mellin_oracle(const BoundarySignal& h1, const BoundarySignal& h2, double x, double t,
    const MellinConfig& cfg = {});

/// PDE residual, trace errors and initial-data errors of boundary_evolution.
DiagnosticsReport verify_linear_ibvp(const BoundarySignal& h1, const BoundarySignal& h2,
    const GridSpec& grid, const BoundaryKernelConfig& cfg = {});

} // namespace hlb
