#include "hlb/studies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hlb/cutoff.hpp"
#include "hlb/errors.hpp"
#include "hlb/linear_flow.hpp"
#include "hlb/profiles.hpp"

namespace hlb {

std::pair<Field, Field> random_schwartz_pair(const GridSpec& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0), centre(-5.0, 5.0), width(0.5, 2.0),
        carrier(0.0, 4.0), phase(0.0, 2.0 * std::numbers::pi);
    auto draw = [&] {
        struct Term {
            double a, c, w, k, p;
        };
        std::vector<Term> terms(3);
        for (auto& t : terms)
            t = {amp(rng), centre(rng), width(rng), carrier(rng), phase(rng)};
        return Field::sample(g, [terms](double x) {
            double acc = 0.0;
            for (const auto& t : terms) {
                const double y = (x - t.c) / t.w;
                acc += t.a * std::exp(-y * y) * std::cos(t.k * x + t.p);
            }
            return acc;
        });
    };
    Field f = draw();
    Field h = draw();
    return {std::move(f), std::move(h)};
}

SpaceTimeField random_windowed_field(const GridSpec& g, std::uint64_t seed, double xi_max)
{
    std::mt19937_64 rng(seed);
    const auto m_max = static_cast<int>(std::floor(xi_max / g.dxi()));
    std::uniform_int_distribution<int> mode(-m_max, m_max);
    std::uniform_real_distribution<double> amp(-1.0, 1.0), unit(0.0, 1.0),
        phase(0.0, 2.0 * std::numbers::pi);
    struct Term {
        double a, xi, th, om, ps;
    };
    std::vector<Term> terms(6);
    for (auto& t : terms) {
        t.a = amp(rng);
        t.xi = static_cast<double>(mode(rng)) * g.dxi();
        t.th = phase(rng);
        // Frequencies spread from resonant (omega ~ xi^2) to well off it.
        t.om = unit(rng) * (t.xi * t.xi + 4.0);
        t.ps = phase(rng);
    }
    SpaceTimeField u(g, 1.0);
    for (std::size_t n = 0; n < g.nt; ++n) {
        const double t = g.t(n);
        const double w = eta(t);
        for (std::size_t j = 0; j < g.nx; ++j) {
            double acc = 0.0;
            for (const auto& term : terms)
                acc += term.a * std::cos(term.xi * g.x(j) + term.th) * std::cos(term.om * t + term.ps);
            u.at(n, j) = w * acc;
        }
    }
    return u;
}

GridSpec refined(const GridSpec& g, std::size_t fx, std::size_t ft)
{
    GridSpec r = g;
    r.nx *= fx;
    r.nt *= ft;
    return r;
}

std::vector<PairedSample> kato_study(const GridSpec& space, const GridSpec& times, double s,
    std::size_t seeds, std::uint64_t base_seed)
{
    std::vector<PairedSample> out;
    const GridSpec fine = refined(times, 1, 2);
    for (std::size_t i = 0; i < seeds; ++i) {
        const std::uint64_t seed = base_seed + i;
        const auto [f, g] = random_schwartz_pair(space, seed);
        out.push_back({seed, kato_ratio(f, g, s, times), kato_ratio(f, g, s, fine)});
    }
    return out;
}

std::vector<PairedSample> bilinear_study(const GridSpec& grid, double s, double a, double b,
    std::size_t seeds, std::uint64_t base_seed)
{
    std::vector<PairedSample> out;
    const GridSpec fine = refined(grid, 2, 2);
    for (std::size_t i = 0; i < seeds; ++i) {
        const std::uint64_t seed = base_seed + i;
        // Distinct streams for the two factors.
        const std::uint64_t su = 2 * seed;
        const std::uint64_t sv = 2 * seed + 1;
        const double coarse = bilinear_ratio(random_windowed_field(grid, su), random_windowed_field(grid, sv), s, a, b);
        const double refined_ratio
            = bilinear_ratio(random_windowed_field(fine, su), random_windowed_field(fine, sv), s, a, b);
        out.push_back({seed, coarse, refined_ratio});
    }
    return out;
}

double max_change(const std::vector<PairedSample>& v)
{
    double c = 0.0;
    double f = 0.0;
    for (const auto& p : v) {
        c = std::max(c, p.coarse);
        f = std::max(f, p.fine);
    }
    return c > 0.0 ? std::abs(f - c) / c : 0.0;
}

std::vector<SupremumRow> supremum_sweep(const std::vector<double>& s_values, double a, double b,
    const std::vector<double>& cutoffs, const SupremumOptions& opts)
{
    std::vector<SupremumRow> rows;
    for (double s : s_values) {
        double prev = 0.0;
        for (double c : cutoffs) {
            SupremumRow r{s, a, b, c, multiplier_supremum(s, a, b, c, opts), 0.0};
            r.growth = prev > 0.0 ? r.result.value / prev - 1.0 : 0.0;
            prev = r.result.value;
            rows.push_back(r);
        }
    }
    return rows;
}

IBVPData smooth_data(const GridSpec& grid, const std::function<double(double)>& f, double s, ExtensionMethod ext)
{
    IBVPData d;
    d.f = HalfLineFunction::sample(grid, f, s);
    d.g = HalfLineFunction::sample(grid, [](double) { return 0.0; }, s - 1.0);
    d.h1 = BoundarySignal::zeros(grid.dt(), grid.nt);
    d.h2 = BoundarySignal::zeros(grid.dt(), grid.nt);
    d.s = s;
    d.extension = ext;
    return d;
}

SmoothingRun smoothing_run(const GridSpec& grid, const RoughDataSpec& spec, std::uint64_t seed, double s,
    double a, const SolverConfig& cfg)
{
    const IBVPData data = smooth_data(grid, rough_profile(grid, spec.amplitude, spec.decay, seed), s, spec.extension);
    const SolutionBundle b = solve(data, cfg);
    SmoothingRun run;
    run.seed = seed;
    run.nx = grid.nx;
    run.T = b.T;
    run.residual = smoothing_residual(b, a);
    for (std::size_t n = 0; n < run.residual.size(); ++n) {
        run.t.push_back(grid.t(n));
        run.full_norm.push_back(sobolev_norm(b.u.slice(n), s + a));
    }
    return run;
}

std::vector<ComparisonRow> compare_fields(const SpaceTimeField& ua, const SpaceTimeField& ub, double x_lo,
    double x_hi, double t_hi)
{
    const GridSpec& g = ua.grid;
    if (!(ub.grid == g))
        throw ConfigError("compare_fields: grids differ");
    std::vector<ComparisonRow> rows;
    for (std::size_t n = 0; n < g.nt && g.t(n) <= t_hi; ++n) {
        double m = 0.0;
        for (std::size_t j = 0; j < g.nx; ++j) {
            const double x = g.x(j);
            if (x >= x_lo && x <= x_hi)
                m = std::max(m, std::abs(ua.at(n, j) - ub.at(n, j)));
        }
        rows.push_back({g.t(n), m});
    }
    return rows;
}

FDProblem fd_problem_for(const std::function<double(double)>& f, const std::function<double(double)>& u_t0)
{
    FDProblem p;
    p.f = f;
    p.u_t0 = u_t0;
    p.h1 = [](double) { return 0.0; };
    p.h2 = [](double) { return 0.0; };
    return p;
}

} // namespace hlb
