#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hlb/boundary.hpp"
#include "hlb/cli.hpp"
#include "hlb/errors.hpp"
#include "hlb/studies.hpp"

namespace hlb::cli {

std::string cell(double v)
{
    // Shortest %.Ng that reads back to the same double.
    char buf[32];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v || std::isnan(v))
            break;
    }
    return buf;
}

namespace {

std::vector<std::string> cells(std::initializer_list<double> v)
{
    std::vector<std::string> out;
    for (double x : v)
        out.push_back(cell(x));
    return out;
}

double compare_limit(const ExperimentConfig& cfg)
{
    return cfg.experiment.compare_x_max > 0.0 ? cfg.experiment.compare_x_max : cfg.grid.L / 4.0;
}

SupremumOptions supremum_options(const ExperimentConfig& cfg)
{
    SupremumOptions o;
    o.geometry = cfg.experiment.geometry == "box" ? SupremumGeometry::box : SupremumGeometry::parabolic;
    o.probes = cfg.experiment.probes;
    o.rel_tol = cfg.experiment.rel_tol;
    return o;
}

void add_scalars(Table& t, const DiagnosticsReport& rep, const std::string& prefix = "")
{
    for (const auto& [k, v] : rep.scalars)
        t.summary.emplace_back(prefix + k, v);
}

Table solve_command(const ExperimentConfig& cfg)
{
    const SolutionBundle b = solve(build_data(cfg), cfg.solver);
    Table t{{"iter", "diff_norm", "contraction_factor", "T"}, {}, {}};
    const auto& it = b.diagnostics.get_series("iteration");
    const auto& diff = b.diagnostics.get_series("diff_norm");
    const auto& ratio = b.diagnostics.get_series("contraction_factor");
    const auto& T = b.diagnostics.get_series("window_T");
    for (std::size_t i = 0; i < it.size(); ++i)
        t.rows.push_back(cells({it[i], diff[i], ratio[i], T[i]}));
    add_scalars(t, b.diagnostics);
    return t;
}

Table linear_verify_command(const ExperimentConfig& cfg)
{
    const IBVPData d = build_data(cfg);
    const DiagnosticsReport rep = verify_linear_ibvp(d.h1, d.h2, cfg.grid, cfg.solver.kernel);
    Table t{{"metric", "value"}, {}, {}};
    for (const auto& [k, v] : rep.scalars)
        t.rows.push_back({k, cell(v)});
    return t;
}

// eta(t) lives on [-2, 2]. Windowed studies use exactly that time axis so
// the fields vanish smoothly at both ends of the periodic box.
GridSpec windowed_times(const GridSpec& g)
{
    GridSpec times = g;
    times.t_origin = -2.0;
    times.t_max = 4.0;
    return times;
}

Table paired_table(const std::vector<PairedSample>& v)
{
    Table t{{"seed", "ratio_coarse", "ratio_fine"}, {}, {}};
    for (const auto& p : v)
        t.rows.push_back(cells({static_cast<double>(p.seed), p.coarse, p.fine}));
    t.summary.emplace_back("max_change", max_change(v));
    return t;
}

Table kato_command(const ExperimentConfig& cfg)
{
    const auto& e = cfg.experiment;
    return paired_table(kato_study(cfg.grid, windowed_times(cfg.grid), cfg.s, e.seeds, e.seed));
}

Table bilinear_command(const ExperimentConfig& cfg)
{
    const auto& e = cfg.experiment;
    return paired_table(bilinear_study(windowed_times(cfg.grid), cfg.s, e.a, e.b, e.seeds, e.seed));
}

Table supremum_command(const ExperimentConfig& cfg)
{
    const auto& e = cfg.experiment;
    auto cutoffs = e.cutoffs;
    std::sort(cutoffs.begin(), cutoffs.end());
    Table t{{"s", "a", "b", "cutoff", "supremum", "xi_star", "tau_star", "growth", "diverging"}, {}, {}};
    for (const auto& r : supremum_sweep(e.s_values, e.a, e.b, cutoffs, supremum_options(cfg)))
        t.rows.push_back(cells({r.s, r.a, r.b, r.cutoff, r.result.value, r.result.xi, r.result.tau, r.growth,
            r.growth > e.diverge_growth ? 1.0 : 0.0}));
    return t;
}

Table smoothing_command(const ExperimentConfig& cfg)
{
    if (cfg.f.kind != "rough")
        throw ConfigError("smoothing: f.profile must be rough");
    const auto& e = cfg.experiment;
    SolverConfig sc = cfg.solver;
    sc.smoothing = true;
    sc.a = e.a;
    sc.validate(cfg.s);
    const RoughDataSpec spec{cfg.f.amplitude, cfg.f.decay, parse_extension(cfg.extension)};
    Table t{{"seed", "nx", "t", "residual_norm", "full_norm"}, {}, {}};
    for (std::size_t i = 0; i < e.seeds; ++i) {
        for (const GridSpec& g : {cfg.grid, refined(cfg.grid, 2, 1)}) {
            const SmoothingRun run = smoothing_run(g, spec, cfg.f.seed + i, cfg.s, e.a, sc);
            for (std::size_t n = 0; n < run.t.size(); ++n)
                t.rows.push_back(cells({static_cast<double>(run.seed), static_cast<double>(run.nx), run.t[n],
                    run.residual[n], run.full_norm[n]}));
        }
    }
    return t;
}

Table comparison_table(const std::vector<ComparisonRow>& rows, const std::string& column)
{
    Table t{{"t", column}, {}, {}};
    double worst = 0.0;
    for (const auto& r : rows) {
        t.rows.push_back(cells({r.t, r.max_abs_diff}));
        worst = std::max(worst, r.max_abs_diff);
    }
    t.summary.emplace_back("overall_" + column, worst);
    return t;
}

Table extension_command(const ExperimentConfig& cfg)
{
    const auto& ext = cfg.experiment.extensions;
    if (ext.size() != 2)
        throw ConfigError("extension-independence: experiment.extensions must name exactly two methods");
    ExperimentConfig a = cfg;
    ExperimentConfig b = cfg;
    a.extension = ext[0];
    b.extension = ext[1];
    const SolutionBundle ua = solve(build_data(a), cfg.solver);
    const SolutionBundle ub = solve(build_data(b), cfg.solver);
    const double T = std::min(ua.T, ub.T);
    Table t = comparison_table(compare_fields(ua.u_restricted, ub.u_restricted, 0.0, compare_limit(cfg), T),
        "max_abs_diff");
    t.summary.emplace_back("T", T);
    return t;
}

// Fourth-order central difference; profiles are smooth wherever this is used.
std::function<double(double)> derivative(std::function<double(double)> f)
{
    return [f](double x) {
        const double h = 1e-3;
        return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h);
    };
}

Table oracle_command(const ExperimentConfig& cfg)
{
    const auto& e = cfg.experiment;
    for (const auto* p : {&cfg.f, &cfg.g})
        if (p->kind == "rough")
            throw ConfigError("oracle-compare: the finite-difference oracle needs smooth data");
    const SolutionBundle sol = solve(build_data(cfg), cfg.solver);
    FDProblem fd;
    fd.f = profile_function(cfg.f, cfg.grid);
    fd.u_t0 = derivative(profile_function(cfg.g, cfg.grid));
    fd.h1 = profile_function(cfg.h1, cfg.grid);
    fd.h2 = profile_function(cfg.h2, cfg.grid);
    fd.nonlinear = cfg.solver.nonlinear ? 1.0 : 0.0;
    const double x_max = e.fd_x_max > 0.0 ? e.fd_x_max : cfg.grid.L;
    const FDGrid grid = fd_grid_for(cfg.grid, x_max, e.fd_refine, e.fd_courant, e.fd_damping);
    const SpaceTimeField ref = fd_solve(fd, grid, cfg.grid);
    Table t = comparison_table(compare_fields(sol.u_restricted, ref, 0.0, compare_limit(cfg), sol.T),
        "max_abs_error");
    t.summary.emplace_back("T", sol.T);
    add_scalars(t, sol.diagnostics, "solve.");
    return t;
}

} // namespace

Table run_command(const ExperimentConfig& cfg)
{
    const std::string& c = cfg.command;
    if (c == "solve")
        return solve_command(cfg);
    if (c == "linear-verify")
        return linear_verify_command(cfg);
    if (c == "kato")
        return kato_command(cfg);
    if (c == "bilinear")
        return bilinear_command(cfg);
    if (c == "supremum-sweep")
        return supremum_command(cfg);
    if (c == "smoothing")
        return smoothing_command(cfg);
    if (c == "extension-independence")
        return extension_command(cfg);
    if (c == "oracle-compare")
        return oracle_command(cfg);
    throw ConfigError("unknown command '" + c + "'");
}

std::string to_csv(const Table& t)
{
    std::string out;
    auto line = [&](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? "," : "") + v[i];
        out += '\n';
    };
    line(t.header);
    for (const auto& r : t.rows)
        line(r);
    return out;
}

} // namespace hlb::cli
