#include "hlb/picard.hpp"

#include <cmath>
#include <limits>

#include "hlb/cutoff.hpp"
#include "hlb/duhamel.hpp"
#include "hlb/errors.hpp"
#include "hlb/linear_flow.hpp"
#include "hlb/xsb.hpp"

namespace hlb {
namespace {

void check_signal(const BoundarySignal& h, const GridSpec& g, const char* name)
{
    if (h.size() != g.nt || std::abs(h.dt - g.dt()) > 1e-12 * g.dt())
        throw ConfigError(std::string("IBVPData: ") + name + " is not sampled on the solve time grid");
    for (double v : h.values)
        if (!std::isfinite(v))
            throw ConfigError(std::string("IBVPData: ") + name + " has non-finite samples");
}

BoundarySignal minus(const BoundarySignal& a, const BoundarySignal& b)
{
    BoundarySignal out = a;
    for (std::size_t n = 0; n < out.values.size(); ++n)
        out.values[n] -= b.values[n];
    return out;
}

BoundarySignal negate(BoundarySignal a)
{
    for (auto& v : a.values)
        v = -v;
    return a;
}

} // namespace

void IBVPData::validate() const
{
    const GridSpec& gr = grid();
    gr.validate();
    if (gr.t_origin != 0.0)
        throw ConfigError("IBVPData: the solve time grid must start at t = 0");
    if (!(g.grid == gr) || f.samples.size() != gr.nx / 2 || g.samples.size() != gr.nx / 2)
        throw ConfigError("IBVPData: f and g must be sampled on the half-line nodes of one grid");
    for (const auto* h : {&f, &g})
        for (double v : h->samples)
            if (!std::isfinite(v))
                throw ConfigError("IBVPData: initial data has non-finite samples");
    check_signal(h1, gr, "h1");
    check_signal(h2, gr, "h2");
    const auto verdict = check_compatibility(f, h1, h2, s);
    if (!verdict.pass)
        throw CompatibilityViolation("IBVPData: compatibility fails at s = " + std::to_string(s) + ": "
            + verdict.reason);
}

void SolverConfig::validate(double s) const
{
    if (!(b > 0.0 && b < 0.5))
        throw RangeViolation("SolverConfig: b must lie in (0, 1/2)");
    if (!(theta > 0.0 && theta < 1.0))
        throw RangeViolation("SolverConfig: theta must lie in (0, 1)");
    if (max_iters == 0 || !(fp_tol > 0.0) || T_init < 0.0)
        throw ConfigError("SolverConfig: need max_iters > 0, fp_tol > 0, T_init >= 0");
    if (smoothing && !(a < smoothing_bound(s)))
        throw RangeViolation("SolverConfig: smoothing exponent a must be below min{1/2, s+1/2, 5/2-s} = "
            + std::to_string(smoothing_bound(s)));
}

double smoothing_bound(double s) { return std::min({0.5, s + 0.5, 2.5 - s}); }

SpaceTimeField restrict_field(const SpaceTimeField& u)
{
    SpaceTimeField r = u;
    const std::size_t z = u.grid.zero_index();
    for (std::size_t n = 0; n < u.grid.nt; ++n)
        for (std::size_t j = 0; j < z; ++j)
            r.at(n, j) = 0.0;
    return r;
}

PhiCache build_phi_cache(const IBVPData& data, const SolverConfig& cfg, double T)
{
    const GridSpec& grid = data.grid();
    PhiCache c;
    c.T = T;
    const Field fe = extend(data.f, data.extension);
    const Field ge = extend(data.g, data.extension);
    c.free_part = free_flow_field(fe, ge, grid);
    apply_time_window(c.free_part, T);
    c.free_part.window_T = T;
    const TracePair p = trace_at_zero(fe, ge, grid, T);
    c.boundary_part = boundary_evolution(minus(data.h1, p.p1), minus(data.h2, p.p2), grid, cfg.kernel,
        BoundaryTerms::all, &c.resolution);
    apply_time_window(c.boundary_part, T);
    c.boundary_part.window_T = T;
    return c;
}

SpaceTimeField phi_map(const SpaceTimeField& u, const IBVPData& data, const SolverConfig& cfg,
    const PhiCache& cache)
{
    const GridSpec& grid = data.grid();
    const double T = cache.T;
    SpaceTimeField out = cache.free_part + cache.boundary_part;
    out.window_T = T;
    if (!cfg.nonlinear)
        return out;
    SpaceTimeField G = nonlinearity(u, T);
    G *= -1.0;
    const DuhamelParts d = duhamel_with_traces(G, T);
    out += d.field;
    SpaceTimeField corr = boundary_evolution(negate(d.traces.p1), negate(d.traces.p2), grid, cfg.kernel);
    apply_time_window(corr, T);
    out += corr;
    return out;
}

SpaceTimeField phi_map(const SpaceTimeField& u, const IBVPData& data, const SolverConfig& cfg, double T)
{
    return phi_map(u, data, cfg, build_phi_cache(data, cfg, T));
}

SolutionBundle solve(const IBVPData& data, const SolverConfig& cfg)
{
    data.validate();
    cfg.validate(data.s);
    const GridSpec& grid = data.grid();
    double T = cfg.T_init > 0.0 ? cfg.T_init : 0.5 * grid.t_max;
    if (T > grid.t_max)
        throw ConfigError("solve: T_init exceeds the time axis");

    DiagnosticsReport rep;
    std::size_t restarts = 0;
    while (true) {
        if (T < 4.0 * grid.dt())
            throw NoContraction("solve: window T fell below 4 dt without contraction");
        const PhiCache cache = build_phi_cache(data, cfg, T);
        // The boundary kernel's doubling check runs on the first evaluation
        // only; later corrections reuse the same adaptive rules.
        SolverConfig quiet = cfg;
        quiet.kernel.check_convergence = false;

        SpaceTimeField u = cache.free_part;
        double prev = -1.0;
        int over = 0;
        bool restart = false;
        for (std::size_t it = 1; it <= cfg.max_iters; ++it) {
            SpaceTimeField next = phi_map(u, data, it == 1 ? cfg : quiet, cache);
            const double diff = xsb_norm(next - u, data.s, cfg.b);
            if (!std::isfinite(diff))
                throw NumericalFailure("solve: non-finite iterate");
            const double ratio = prev > 0.0 ? diff / prev : std::numeric_limits<double>::quiet_NaN();
            rep.append("iteration", static_cast<double>(it));
            rep.append("diff_norm", diff);
            rep.append("contraction_factor", ratio);
            rep.append("window_T", T);
            u = std::move(next);
            if (diff < cfg.fp_tol) {
                SolutionBundle b;
                b.T = T;
                b.s = data.s;
                b.u = u;
                b.u.window_T = T;
                b.u_restricted = restrict_field(u);
                b.linear_part = cache.free_part + cache.boundary_part;
                b.linear_part.window_T = T;
                rep.set("iterations", static_cast<double>(it));
                rep.set("restarts", static_cast<double>(restarts));
                rep.set("final_T", T);
                rep.set("fixed_point_residual", diff);
                rep.set("omega_cutoff", cache.resolution.omega_cutoff);
                rep.set("n_quad", static_cast<double>(cache.resolution.n_quad));
                double e1 = 0.0;
                double e2 = 0.0;
                const std::size_t z = grid.zero_index();
                for (std::size_t n = 0; n < grid.nt && grid.t(n) <= 0.5 * T; ++n) {
                    e1 = std::max(e1, std::abs(u.at(n, z).real() - data.h1.values[n]));
                    // Fourth-order one-sided slope: the representative is not smooth across x = 0.
                    const auto v = [&](std::size_t i) { return u.at(n, z + i).real(); };
                    const double slope = (-25.0 * v(0) + 48.0 * v(1) - 36.0 * v(2) + 16.0 * v(3) - 3.0 * v(4))
                        / (12.0 * grid.dx());
                    e2 = std::max(e2, std::abs(slope - data.h2.values[n]));
                }
                rep.set("trace_error_h1", e1);
                rep.set("trace_error_h2", e2);
                b.diagnostics = std::move(rep);
                return b;
            }
            over = (prev > 0.0 && ratio > cfg.theta) ? over + 1 : 0;
            prev = diff;
            if (over >= 3) {
                restart = true;
                break;
            }
        }
        if (!restart)
            throw IterationLimit("solve: no convergence within max_iters = " + std::to_string(cfg.max_iters));
        T *= 0.5;
        ++restarts;
    }
}

std::vector<double> smoothing_residual(const SolutionBundle& bundle, double a)
{
    if (!(a < smoothing_bound(bundle.s)))
        throw RangeViolation("smoothing_residual: a = " + std::to_string(a) + " is outside a < min{1/2, s+1/2, 5/2-s}");
    const GridSpec& g = bundle.u.grid;
    std::vector<double> out;
    for (std::size_t n = 0; n < g.nt && g.t(n) <= bundle.T; ++n) {
        Field d = bundle.u.slice(n);
        const Field l = bundle.linear_part.slice(n);
        for (std::size_t j = 0; j < g.nx; ++j)
            d.values[j] -= l.values[j];
        out.push_back(sobolev_norm(d, bundle.s + a));
    }
    return out;
}

} // namespace hlb
