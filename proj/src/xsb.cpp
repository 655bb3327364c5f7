#include "hlb/xsb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hlb/duhamel.hpp"
#include "hlb/errors.hpp"
#include "hlb/fft.hpp"
#include "hlb/linear_flow.hpp"

namespace hlb {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double jb(double x) { return std::sqrt(1.0 + x * x); }

std::size_t wrap(long k, std::size_t n)
{
    return k >= 0 ? static_cast<std::size_t>(k) : n - static_cast<std::size_t>(-k);
}

// Adaptive Gauss-Kronrod on [a, b]; accumulates the error estimate.
template <class F>
double gk(F f, double a, double b, double tol, double& err)
{
    if (b <= a)
        return 0.0;
    double e = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 12, tol, &e);
    err += e;
    return v;
}

// int_lo^hi <t - p>^{-e} <t - q>^{-e} dt. Each piece is mapped by
// t = anchor +- sinh(v) from its nearest peak, which flattens both the
// unit-width peak and the algebraic tail; the mapped integrand is then
// integrated by a fixed 10-point rule on panels of width about 2 in v. A fixed rule
// keeps the result a smooth function of (p, q), which the outer adaptive
// quadrature relies on.
double peak_pair_integral(double p, double q, double lo, double hi, double e)
{
    if (hi <= lo)
        return 0.0;
    using rule = boost::math::quadrature::gauss<double, 10>;
    const auto& xg = rule::abscissa();
    const auto& wg = rule::weights();
    auto piece = [&](double anchor, double end) {
        const double dir = end >= anchor ? 1.0 : -1.0;
        const double vmax = std::asinh(std::abs(end - anchor));
        if (vmax <= 0.0)
            return 0.0;
        // The mapped integrand is smooth on scale 1 in v; panels of width 2 suffice.
        const auto panels = static_cast<std::size_t>(std::ceil(0.5 * vmax));
        const double h = vmax / static_cast<double>(panels);
        double acc = 0.0;
        for (std::size_t k = 0; k < panels; ++k) {
            const double mid = (static_cast<double>(k) + 0.5) * h;
            for (std::size_t i = 0; i < xg.size(); ++i)
                for (int sgn : {-1, 1}) {
                    if (sgn == 1 && xg[i] == 0.0)
                        continue;
                    const double v = mid + sgn * 0.5 * h * xg[i];
                    const double ev = std::exp(v);
                    const double t = anchor + dir * 0.5 * (ev - 1.0 / ev);
                    const double c = 0.5 * (ev + 1.0 / ev);
                    acc += 0.5 * h * wg[i] * c * std::pow((1.0 + (t - p) * (t - p)) * (1.0 + (t - q) * (t - q)), -0.5 * e);
                }
        }
        return acc;
    };
    const double a = std::clamp(std::min(p, q), lo, hi);
    const double c = std::clamp(std::max(p, q), lo, hi);
    const double mid = 0.5 * (a + c);
    return piece(a, lo) + piece(a, mid) + piece(c, mid) + piece(c, hi);
}

double pow_bracket(double x, double e) { return std::pow(1.0 + x * x, 0.5 * e); }

} // namespace

double ModulationWeight::operator()(double xi, double tau) const
{
    const double centre = symbol == ModulationSymbol::parabolic ? xi * xi : dispersion(xi);
    return pow_bracket(xi, s) * pow_bracket(std::abs(tau) - centre, b);
}

bool RegionSpec::contains(double xi, double tau) const
{
    if (!apply_indicator)
        return true;
    if (tag == RegionTag::Q)
        return std::abs(xi) >= 1.0 && std::abs(tau) <= c_Q * xi * xi;
    return std::abs(xi) <= 1.0 || std::abs(tau) >= c_R * xi * xi;
}

double space_time_tau(const GridSpec& g, std::size_t n)
{
    return two_pi * static_cast<double>(signed_index(n, g.nt)) / (static_cast<double>(g.nt) * g.dt());
}

std::vector<cplx> space_time_spectrum(const SpaceTimeField& u)
{
    const GridSpec& g = u.grid;
    std::vector<cplx> S(u.values);
    fft::forward_2d(S.data(), g.nt, g.nx);
    const double scale = g.dx() * g.dt();
    for (auto& c : S)
        c *= scale;
    return S;
}

namespace {

double weighted_norm(const std::vector<cplx>& S, const GridSpec& g, const ModulationWeight& w)
{
    const double dtau = two_pi / (static_cast<double>(g.nt) * g.dt());
    double acc = 0.0;
    for (std::size_t n = 0; n < g.nt; ++n) {
        const double tau = space_time_tau(g, n);
        for (std::size_t k = 0; k < g.nx; ++k) {
            const double wk = w(g.xi(k), tau);
            acc += wk * wk * std::norm(S[n * g.nx + k]);
        }
    }
    return std::sqrt(acc * g.dxi() * dtau / (two_pi * two_pi));
}

} // namespace

double xsb_norm(const SpaceTimeField& u, double s, double b, ModulationSymbol symbol)
{
    return weighted_norm(space_time_spectrum(u), u.grid, {s, b, symbol});
}

double bilinear_ratio(const SpaceTimeField& u, const SpaceTimeField& v, double s, double a, double b)
{
    const GridSpec& g = u.grid;
    if (!(v.grid == g))
        throw ConfigError("bilinear_ratio: fields live on different grids");
    const double du = xsb_norm(u, s, b);
    const double dv = xsb_norm(v, s, b);
    if (du * dv < 1e-300)
        throw DegenerateData("bilinear_ratio: zero denominator");

    const std::size_t nt = g.nt, nx = g.nx, mt = 2 * nt, mx = 2 * nx;
    auto padded = [&](const SpaceTimeField& w) {
        std::vector<cplx> W(w.values);
        fft::forward_2d(W.data(), nt, nx);
        std::vector<cplx> P(mt * mx, cplx{});
        for (std::size_t n = 0; n < nt; ++n)
            for (std::size_t k = 0; k < nx; ++k)
                P[wrap(signed_index(n, nt), mt) * mx + wrap(signed_index(k, nx), mx)] = W[n * nx + k];
        fft::backward_2d(P.data(), mt, mx);
        return P;
    };
    std::vector<cplx> prod = padded(u);
    const std::vector<cplx> pv = padded(v);
    // Each padded inverse carries a factor nt*nx relative to the samples.
    const double unscale = 1.0 / (static_cast<double>(nt * nx) * static_cast<double>(nt * nx));
    for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] *= pv[i] * unscale;
    fft::forward_2d(prod.data(), mt, mx);

    SpaceTimeField product(g);
    std::vector<cplx> S(nt * nx);
    const double to_coarse = 1.0 / 4.0 * g.dx() * g.dt();
    for (std::size_t n = 0; n < nt; ++n)
        for (std::size_t k = 0; k < nx; ++k) {
            const double m = -m_fused_multiplier(g.xi(k));
            S[n * nx + k] = m * to_coarse * prod[wrap(signed_index(n, nt), mt) * mx + wrap(signed_index(k, nx), mx)];
        }
    const double num = weighted_norm(S, g, {s + a, -b, ModulationSymbol::parabolic});
    return num / (du * dv);
}

double region_trace_norm(const SpaceTimeField& G, double s, const RegionSpec& region)
{
    const GridSpec& g = G.grid;
    const std::vector<cplx> S = space_time_spectrum(G);
    const double dtau = two_pi / (static_cast<double>(g.nt) * g.dt());
    double acc = 0.0;
    for (std::size_t n = 0; n < g.nt; ++n) {
        const double tau = space_time_tau(g, n);
        double inner = 0.0;
        for (std::size_t k = 0; k < g.nx; ++k) {
            const double xi = g.xi(k);
            if (xi == 0.0 || !region.contains(xi, tau))
                continue;
            const double mg = std::abs(S[n * g.nx + k]) / dispersion(xi);
            const double w = region.tag == RegionTag::Q ? 1.0 / jb(xi)
                                                        : pow_bracket(std::abs(tau) - xi * xi, (2.0 * s - 3.0) / 4.0);
            inner += w * mg;
        }
        inner *= g.dxi() / two_pi;
        const double tw = region.tag == RegionTag::Q ? pow_bracket(tau, (2.0 * s - 1.0) / 2.0) : 1.0;
        acc += tw * inner * inner;
    }
    return std::sqrt(acc * dtau / two_pi);
}

double multiplier_integral(double xi, double tau, double s, double a, double b, double cutoff,
    const SupremumOptions& opts)
{
    if (xi == 0.0)
        return 0.0; // the xi^4 / (xi^2 + xi^4) prefactor vanishes
    const double xmax = cutoff;
    const double tmax = opts.geometry == SupremumGeometry::parabolic ? cutoff * cutoff : cutoff;
    const double e = 2.0 * b;
    const double pre = xi * xi / (1.0 + xi * xi) * pow_bracket(xi, 2.0 * s + 2.0 * a)
        * pow_bracket(tau - xi * xi, -e);
    const double tol = opts.rel_tol;
    double err = 0.0;
    auto integrand = [&](double x1) {
        const double w = pow_bracket(x1, -2.0 * s) * pow_bracket(xi - x1, -2.0 * s);
        const double d = xi - x1;
        return w * peak_pair_integral(x1 * x1, tau - d * d, -tmax, tmax, e);
    };
    std::vector<double> cuts{-xmax, xmax, 0.0, xi, 0.5 * xi};
    // Resonance: both tau1 peaks coincide where x1^2 + (xi - x1)^2 = tau.
    const double disc = 0.5 * tau - 0.25 * xi * xi;
    if (disc >= 0.0) {
        cuts.push_back(0.5 * xi + std::sqrt(disc));
        cuts.push_back(0.5 * xi - std::sqrt(disc));
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = std::clamp(cuts[i], -xmax, xmax);
        const double hi = std::clamp(cuts[i + 1], -xmax, xmax);
        total += gk(integrand, lo, hi, tol, err);
    }
    if (!std::isfinite(total) || err > 1e-4 * std::abs(total))
        throw QuadratureNotConverged("multiplier_integral: adaptive quadrature did not converge");
    return pre * total;
}

std::vector<double> probe_points(double top, std::size_t count, double octave_steps)
{
    std::vector<double> p{0.0};
    for (std::size_t k = 0; k + 1 < count; ++k)
        p.push_back(top * std::exp2(-static_cast<double>(k) / octave_steps));
    std::sort(p.begin(), p.end());
    return p;
}

SupremumResult multiplier_supremum(double s, double a, double b, double cutoff, const SupremumOptions& opts)
{
    if (cutoff < 10.0)
        throw RangeViolation("multiplier_supremum: cutoff must be at least 10");
    const bool parabolic = opts.geometry == SupremumGeometry::parabolic;
    const auto xs = probe_points(cutoff, opts.probes, 4.0);
    // tau scales like xi^2 in the parabolic box, so it takes half-octave steps.
    const auto ts = parabolic ? probe_points(cutoff * cutoff, opts.probes, 2.0) : probe_points(cutoff, opts.probes, 4.0);
    SupremumResult best;
    for (double xi : xs)
        for (double tau : ts) {
            const double v = multiplier_integral(xi, tau, s, a, b, cutoff, opts);
            if (v > best.value)
                best = {v, xi, tau};
        }
    return best;
}

SupremumResult exchanged_supremum(double s, double a, double b, double cutoff, const SupremumOptions& opts)
{
    if (cutoff < 10.0)
        throw RangeViolation("exchanged_supremum: cutoff must be at least 10");
    const double e = 4.0 * b - 1.0;
    SupremumResult best;
    for (double x1 : probe_points(cutoff, opts.probes, 4.0)) {
        double err = 0.0;
        auto f = [&](double x) {
            return pow_bracket(x, 2.0 * s + 2.0 * a) * pow_bracket(x1, -2.0 * s) * pow_bracket(x - x1, -2.0 * s)
                * pow_bracket(x * (x1 - x), -e);
        };
        std::vector<double> cuts{-cutoff, 0.0, 0.5 * x1, x1, cutoff};
        std::sort(cuts.begin(), cuts.end());
        double v = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            v += gk(f, std::clamp(cuts[i], -cutoff, cutoff), std::clamp(cuts[i + 1], -cutoff, cutoff), opts.rel_tol, err);
        if (!std::isfinite(v) || err > 1e-4 * std::abs(v))
            throw QuadratureNotConverged("exchanged_supremum: adaptive quadrature did not converge");
        if (v > best.value)
            best = {v, x1, 0.0};
    }
    return best;
}

} // namespace hlb
