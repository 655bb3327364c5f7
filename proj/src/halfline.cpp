#include "hlb/halfline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hlb/cutoff.hpp"
#include "hlb/errors.hpp"

namespace hlb {
namespace {

double interpolate_table(const std::vector<std::pair<double, double>>& table, double x)
{
    if (table.empty() || x < table.front().first || x > table.back().first)
        return 0.0;
    auto hi = std::lower_bound(table.begin(), table.end(), x,
        [](const std::pair<double, double>& p, double v) { return p.first < v; });
    if (hi == table.begin())
        return hi->second;
    auto lo = hi - 1;
    const double w = (x - lo->first) / (hi->first - lo->first);
    return (1.0 - w) * lo->second + w * hi->second;
}

double quadratic_slope(double a, double b, double c, double h)
{
    return (-3.0 * a + 4.0 * b - c) / (2.0 * h);
}

} // namespace

HalfLineFunction HalfLineFunction::sample(const GridSpec& g, const std::function<double(double)>& f,
    double s)
{
    HalfLineFunction out{g, std::vector<double>(g.nx / 2), s};
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = f(out.x(i));
    return out;
}

// x = 0 is a grid node, so the interpolating quadratic passes through sample 0.
double HalfLineFunction::value_at_zero() const { return samples.at(0); }

double HalfLineFunction::derivative_at_zero() const
{
    return quadratic_slope(samples.at(0), samples.at(1), samples.at(2), grid.dx());
}

void HalfLineFunction::check_tail(double tol) const
{
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i]))
            throw ConfigError("half-line data: non-finite sample");
        if (x(i) >= 0.95 * grid.L && std::abs(samples[i]) > tol)
            throw TailViolation("half-line data does not decay near x = L (|f| = "
                + std::to_string(std::abs(samples[i])) + " at x = " + std::to_string(x(i)) + ")");
    }
}

BoundarySignal BoundarySignal::sample(double dt, std::size_t n, const std::function<double(double)>& h,
    double s)
{
    BoundarySignal out{dt, std::vector<double>(n), s};
    for (std::size_t k = 0; k < n; ++k)
        out.values[k] = h(out.t(k));
    return out;
}

double BoundarySignal::at(double t) const
{
    if (values.empty() || t < 0.0)
        return 0.0;
    const double pos = t / dt;
    const auto k = static_cast<std::size_t>(pos);
    if (k + 1 >= values.size())
        return k + 1 == values.size() && pos == static_cast<double>(k) ? values[k] : 0.0;
    const double w = pos - static_cast<double>(k);
    return (1.0 - w) * values[k] + w * values[k + 1];
}

double BoundarySignal::value_at_zero() const { return values.at(0); }

double BoundarySignal::derivative_at_zero() const
{
    return quadratic_slope(values.at(0), values.at(1), values.at(2), dt);
}

double BoundarySignal::max_abs() const
{
    double m = 0.0;
    for (double v : values)
        m = std::max(m, std::abs(v));
    return m;
}

ExtensionMethod parse_extension(const std::string& name)
{
    if (name == "zero")
        return ExtensionMethod::zero;
    if (name == "even-reflection" || name == "even_reflection")
        return ExtensionMethod::even_reflection;
    if (name == "smooth-decay-reflection" || name == "smooth_decay_reflection")
        return ExtensionMethod::smooth_decay_reflection;
    throw ConfigError("unknown extension method '" + name + "'");
}

std::string to_string(ExtensionMethod m)
{
    switch (m) {
    case ExtensionMethod::zero:
        return "zero";
    case ExtensionMethod::even_reflection:
        return "even-reflection";
    case ExtensionMethod::smooth_decay_reflection:
        return "smooth-decay-reflection";
    }
    return "?";
}

Field extend(const HalfLineFunction& h, ExtensionMethod method)
{
    h.check_tail();
    const GridSpec& g = h.grid;
    const std::size_t half = g.nx / 2;
    if (h.samples.size() != half)
        throw ConfigError("half-line data: sample count does not match grid");
    auto at = [&](std::size_t i) { return i < half ? h.samples[i] : 0.0; };

    Field out(g, true);
    for (std::size_t i = 0; i < half; ++i)
        out.values[half + i] = h.samples[i];
    for (std::size_t j = 0; j < half; ++j) {
        const std::size_t i = half - j; // mirror node of x_j
        double v = 0.0;
        switch (method) {
        case ExtensionMethod::zero:
            break;
        case ExtensionMethod::even_reflection:
            v = at(i);
            break;
        case ExtensionMethod::smooth_decay_reflection:
            v = (3.0 * at(i) - 2.0 * at(2 * i)) * eta(g.x(j) / (0.25 * g.L));
            break;
        }
        out.values[j] = v;
    }
    return out;
}

HalfLineFunction restrict_to_halfline(const Field& u, double s)
{
    HalfLineFunction out{u.grid, std::vector<double>(u.grid.nx / 2), s};
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = u.values[u.grid.zero_index() + i].real();
    return out;
}

double halfline_norm(const HalfLineFunction& h, double s)
{
    return sobolev_norm(extend(h, ExtensionMethod::smooth_decay_reflection), s);
}

ChiNormReport chi_norm_check(const BoundarySignal& h, double s, double flag_bound)
{
    if (!(s > -0.5 && s < 1.5) || std::abs(s - 0.5) < 1e-12)
        throw RangeViolation("chi_norm_check: s must lie in (-1/2, 3/2) minus {1/2}");
    if (s > 0.5 && std::abs(h.value_at_zero()) > 1e-8)
        throw CompatibilityViolation("chi_norm_check: h(0) must vanish for s > 1/2");

    ChiNormReport rep;
    if (h.max_abs() == 0.0) {
        rep.degenerate = true;
        return rep;
    }
    std::size_t n = 8;
    while (n < 2 * h.size())
        n *= 2;
    GridSpec g;
    g.nx = n;
    g.L = 0.5 * static_cast<double>(n) * h.dt;
    HalfLineFunction hl{g, std::vector<double>(n / 2, 0.0), s};
    std::copy(h.values.begin(), h.values.end(), hl.samples.begin());

    rep.chi_norm = sobolev_norm(extend(hl, ExtensionMethod::zero), s);
    rep.halfline_norm = halfline_norm(hl, s);
    rep.ratio = rep.chi_norm / rep.halfline_norm;
    rep.flagged = rep.ratio > flag_bound;
    return rep;
}

CompatibilityVerdict check_compatibility(const HalfLineFunction& f, const BoundarySignal& h1,
    const BoundarySignal& h2, double s, double tol)
{
    CompatibilityVerdict v;
    if (s <= 0.5)
        return v;
    v.value_mismatch = std::abs(h1.value_at_zero() - f.value_at_zero());
    if (v.value_mismatch >= tol) {
        v.pass = false;
        v.reason = "h1(0) != f(0)";
    }
    if (s > 1.5) {
        v.slope_mismatch = std::abs(h2.value_at_zero() - f.derivative_at_zero());
        if (v.slope_mismatch >= tol) {
            v.pass = false;
            v.reason += v.reason.empty() ? "h2(0) != f'(0)" : "; h2(0) != f'(0)";
        }
    }
    return v;
}

std::vector<std::pair<double, double>> read_two_column(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open data file '" + path + "'");
    std::vector<std::pair<double, double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        double a = 0.0;
        double b = 0.0;
        if (!(ss >> a))
            continue;
        if (!(ss >> b) || !std::isfinite(a) || !std::isfinite(b))
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected two numbers");
        rows.emplace_back(a, b);
    }
    std::sort(rows.begin(), rows.end());
    if (rows.size() < 2)
        throw ConfigError(path + ": need at least two rows");
    return rows;
}

HalfLineFunction halfline_from_table(const GridSpec& g,
    const std::vector<std::pair<double, double>>& table, double s)
{
    return HalfLineFunction::sample(g, [&](double x) { return interpolate_table(table, x); }, s);
}

BoundarySignal signal_from_table(double dt, std::size_t n,
    const std::vector<std::pair<double, double>>& table, double s)
{
    return BoundarySignal::sample(dt, n, [&](double t) { return interpolate_table(table, t); }, s);
}

} // namespace hlb
