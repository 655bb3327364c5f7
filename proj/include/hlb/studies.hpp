#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hlb/fd_oracle.hpp"
#include "hlb/picard.hpp"
#include "hlb/xsb.hpp"

namespace hlb {

/// Real Schwartz-class pair (f, g): three modulated Gaussians each, with
/// amplitudes, centres, widths and carrier frequencies drawn from `seed`.
std::pair<Field, Field> random_schwartz_pair(const GridSpec& g, std::uint64_t seed);

/// eta(t) sum_j a_j cos(xi_j x + theta_j) cos(omega_j t + psi_j) with
/// |xi_j| <= xi_max on multiples of pi/L, so every grid with the same L and
/// t range samples the same function.
SpaceTimeField random_windowed_field(const GridSpec& g, std::uint64_t seed, double xi_max = 6.0);

/// GridSpec with both counts multiplied by the given factors.
GridSpec refined(const GridSpec& g, std::size_t fx, std::size_t ft);

struct PairedSample {
    std::uint64_t seed = 0;
    double coarse = 0.0;
    double fine = 0.0;
};

/// kato_ratio per seed on `times` and on the same axis with N_t doubled.
std::vector<PairedSample> kato_study(const GridSpec& space, const GridSpec& times, double s,
    std::size_t seeds, std::uint64_t base_seed);

/// bilinear_ratio per seed on `grid` and on the grid doubled in both directions.
std::vector<PairedSample> bilinear_study(const GridSpec& grid, double s, double a, double b,
    std::size_t seeds, std::uint64_t base_seed);

/// Relative change of the maxima: |max fine - max coarse| / max coarse.
double max_change(const std::vector<PairedSample>& v);

struct SupremumRow {
    double s = 0.0;
    double a = 0.0;
    double b = 0.0;
    double cutoff = 0.0;
    SupremumResult result;
    /// value / value at the previous cutoff - 1 (0 for the first cutoff).
    double growth = 0.0;
};

std::vector<SupremumRow> supremum_sweep(const std::vector<double>& s_values, double a, double b,
    const std::vector<double>& cutoffs, const SupremumOptions& opts);

/// Data of one rough-data smoothing run.
struct SmoothingRun {
    std::uint64_t seed = 0;
    std::size_t nx = 0;
    std::vector<double> t;
    std::vector<double> residual;  ///< ||u - W_0||_{H^{s+a}}
    std::vector<double> full_norm; ///< ||u||_{H^{s+a}}
    double T = 0.0;
};

struct RoughDataSpec {
    double amplitude = 0.05;
    double decay = 0.6;
    ExtensionMethod extension = ExtensionMethod::even_reflection;
};

/// Solves the rough-data problem for one seed on `grid` and reports the
/// smoothing residual and full norm on the time nodes of the solve window.
SmoothingRun smoothing_run(const GridSpec& grid, const RoughDataSpec& data, std::uint64_t seed, double s,
    double a, const SolverConfig& cfg);

/// Zero-boundary IBVP with f from a callable sampled on `grid`.
IBVPData smooth_data(const GridSpec& grid, const std::function<double(double)>& f, double s,
    ExtensionMethod ext);

struct ComparisonRow {
    double t = 0.0;
    double max_abs_diff = 0.0;
};

/// Max |u_a - u_b| over x in [x_lo, x_hi] for every time node with t <= t_hi.
std::vector<ComparisonRow> compare_fields(const SpaceTimeField& ua, const SpaceTimeField& ub, double x_lo,
    double x_hi, double t_hi);

/// FD problem matching zero-boundary data given by callables.
FDProblem fd_problem_for(const std::function<double(double)>& f, const std::function<double(double)>& u_t0);

} // namespace hlb
