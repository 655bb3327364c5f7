#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hlb/spectral.hpp"

namespace hlb {

/// Real samples on the nodes x = i*dx >= 0 of a GridSpec (node nx/2 + i).
struct HalfLineFunction {
    GridSpec grid;
    std::vector<double> samples;
    double s = 0.0;

    static HalfLineFunction sample(const GridSpec& g, const std::function<double(double)>& f,
        double s = 0.0);

    double x(std::size_t i) const { return static_cast<double>(i) * grid.dx(); }
    /// Quadratic interpolation through the first three samples, at x = 0.
    double value_at_zero() const;
    double derivative_at_zero() const;
    /// Throws TailViolation if |samples| exceed tol on the last 5% of [0, L).
    void check_tail(double tol = 1e-12) const;
};

/// Real samples h(t_n), t_n = n*dt, n = 0..size-1.
struct BoundarySignal {
    double dt = 0.0;
    std::vector<double> values;
    double s = 0.0;

    static BoundarySignal sample(double dt, std::size_t n, const std::function<double(double)>& h,
        double s = 0.0);
    static BoundarySignal zeros(double dt, std::size_t n) { return {dt, std::vector<double>(n, 0.0), 0.0}; }

    std::size_t size() const { return values.size(); }
    double t(std::size_t n) const { return static_cast<double>(n) * dt; }
    double t_max() const { return static_cast<double>(values.size()) * dt; }
    /// Linear interpolation; zero outside the sampled range.
    double at(double t) const;
    double value_at_zero() const;
    double derivative_at_zero() const;
    double max_abs() const;
};

enum class ExtensionMethod { zero, even_reflection, smooth_decay_reflection };

ExtensionMethod parse_extension(const std::string& name);
std::string to_string(ExtensionMethod m);

/// Full-line Field that coincides with h on x >= 0.
///
/// smooth_decay_reflection uses E(x) = 3 h(-x) - 2 h(-2x) on x < 0, which
/// matches value and slope at 0, tapered by eta(x / (L/4)) so the left tail
/// vanishes well before -L.
Field extend(const HalfLineFunction& h, ExtensionMethod method);

/// Exact copy of the x >= 0 samples.
HalfLineFunction restrict_to_halfline(const Field& u, double s = 0.0);

/// Surrogate for the H^s(R+) norm: the H^s(R) norm of the canonical
/// smooth_decay_reflection extension.
double halfline_norm(const HalfLineFunction& h, double s);

struct ChiNormReport {
    double ratio = 0.0;
    double chi_norm = 0.0;
    double halfline_norm = 0.0;
    bool degenerate = false;
    bool flagged = false;
};

/// ||chi h||_{H^s(R)} over the half-line surrogate of h, on a zero-padded
/// symmetric time axis. Requires -1/2 < s < 3/2, s != 1/2; for s > 1/2
/// the signal must vanish at t = 0.
ChiNormReport chi_norm_check(const BoundarySignal& h, double s, double flag_bound = 4.0);

struct CompatibilityVerdict {
    bool pass = true;
    double value_mismatch = 0.0;
    double slope_mismatch = 0.0;
    std::string reason;
};

CompatibilityVerdict check_compatibility(const HalfLineFunction& f, const BoundarySignal& h1,
    const BoundarySignal& h2, double s, double tol = 1e-6);

/// Two whitespace-separated columns per line; '#' starts a comment.
std::vector<std::pair<double, double>> read_two_column(const std::string& path);

/// Linear interpolation of tabulated (x, value) pairs onto x >= 0 nodes;
/// zero outside the table.
HalfLineFunction halfline_from_table(const GridSpec& g,
    const std::vector<std::pair<double, double>>& table, double s = 0.0);
BoundarySignal signal_from_table(double dt, std::size_t n,
    const std::vector<std::pair<double, double>>& table, double s = 0.0);

} // namespace hlb
