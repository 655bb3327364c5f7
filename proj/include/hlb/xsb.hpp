#pragma once

#include <vector>

#include "hlb/space_time.hpp"

namespace hlb {

/// Which modulation symbol measures the distance to the characteristic set.
enum class ModulationSymbol {
    parabolic, ///< <|tau| - xi^2>, the equivalent form used by default
    exact      ///< <|tau| - sqrt(xi^2 + xi^4)>
};

/// <xi>^s <|tau| - xi^2>^b (or the exact symbol).
struct ModulationWeight {
    double s = 0.0;
    double b = 0.0;
    ModulationSymbol symbol = ModulationSymbol::parabolic;
    double operator()(double xi, double tau) const;
};

enum class RegionTag { Q, R };

/// Q = {|tau| <= c_Q xi^2, |xi| >= 1}; R = {|tau| >= c_R xi^2} u {|xi| <= 1}.
struct RegionSpec {
    RegionTag tag = RegionTag::Q;
    double c_Q = 0.25;
    double c_R = 4.0;
    /// When false the indicator is dropped (the unrestricted comparison norm).
    bool apply_indicator = true;
    bool contains(double xi, double tau) const;
};

/// 2D continuous-transform spectrum dx dt FFT(u), row-major [n * nx + k];
/// frequencies via space_time_tau / GridSpec::xi.
std::vector<cplx> space_time_spectrum(const SpaceTimeField& u);
double space_time_tau(const GridSpec& g, std::size_t n);

/// (dxi dtau / 4 pi^2 sum w(xi, tau)^2 |uhat|^2)^{1/2}.
double xsb_norm(const SpaceTimeField& u, double s, double b,
    ModulationSymbol symbol = ModulationSymbol::parabolic);

/// ||M (uv)_xx||_{X^{s+a,-b}} / (||u||_{X^{s,b}} ||v||_{X^{s,b}}); the product
/// is formed on a grid zero-padded by two in both directions.
double bilinear_ratio(const SpaceTimeField& u, const SpaceTimeField& v, double s, double a, double b);

/// Auxiliary trace norms of M G restricted to Q or R:
///   Q: || <tau>^{(2s-1)/4} sum_xi chi_Q <xi>^{-1} |M Ghat| dxi/2pi ||_{l2_tau}
///   R: || sum_xi chi_R <|tau| - xi^2>^{(2s-3)/4} |M Ghat| dxi/2pi ||_{l2_tau}
double region_trace_norm(const SpaceTimeField& G, double s, const RegionSpec& region);

/// Truncation of the (xi1, tau1) integration box.
enum class SupremumGeometry {
    box,      ///< |xi1| <= C, |tau1| <= C
    parabolic ///< |xi1| <= C, |tau1| <= C^2
};

struct SupremumOptions {
    SupremumGeometry geometry = SupremumGeometry::parabolic;
    std::size_t probes = 33;
    double rel_tol = 1e-4;
};

/// The reduced multiplier integral at one outer point (xi, tau):
///   int int xi^4 <xi>^{2s+2a} <xi1>^{-2s} <xi-xi1>^{-2s}
///     / ((xi^2+xi^4) <tau-xi^2>^{2b} <tau1-xi1^2>^{2b} <tau-tau1-(xi-xi1)^2>^{2b})
/// over the truncated box. Throws QuadratureNotConverged.
double multiplier_integral(double xi, double tau, double s, double a, double b, double cutoff,
    const SupremumOptions& opts = {});

struct SupremumResult {
    double value = 0.0;
    double xi = 0.0;
    double tau = 0.0;
};

/// Max of multiplier_integral over a geometric probe grid reaching the
/// cutoff (tau up to the tau1 truncation). Requires cutoff >= 10.
SupremumResult multiplier_supremum(double s, double a, double b, double cutoff,
    const SupremumOptions& opts = {});

/// The exchanged-role reduction:
///   sup_{xi1} int_{|xi|<=C} <xi>^{2s+2a} <xi1>^{-2s} <xi-xi1>^{-2s} <xi(xi1-xi)>^{1-4b} dxi.
SupremumResult exchanged_supremum(double s, double a, double b, double cutoff,
    const SupremumOptions& opts = {});

/// Geometric probe points {0} u {top 2^{-k/q}} with q chosen so the grid
/// for 2C contains the grid for C above its lowest octave.
std::vector<double> probe_points(double top, std::size_t count, double octave_steps);

} // namespace hlb
