#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hlb/cli.hpp"
#include "hlb/errors.hpp"
#include "hlb/profiles.hpp"

namespace hlb::cli {

namespace {

std::string fmt(double v) { return cell(v); }

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (trim(v.substr(used)).empty())
            return d;
    } catch (const std::exception&) {
    }
    throw ConfigError(key + ": expected a number, got '" + v + "'");
}

std::uint64_t to_u64(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        if (!v.empty() && v.front() != '-') {
            const auto n = std::stoull(v, &used);
            if (trim(v.substr(used)).empty())
                return n;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError(key + ": expected a non-negative integer, got '" + v + "'");
}

bool to_bool(const std::string& key, const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> split(const std::string& v)
{
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty())
            out.push_back(trim(item));
    return out;
}

std::vector<double> to_doubles(const std::string& key, const std::string& v)
{
    std::vector<double> out;
    for (const auto& item : split(v))
        out.push_back(to_double(key, item));
    if (out.empty())
        throw ConfigError(key + ": empty list");
    return out;
}

std::string join(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + fmt(v[i]);
    return s;
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i];
    return s;
}

struct Key {
    std::string section;
    std::string name;
    std::function<void(ExperimentConfig&, const std::string&)> set;
    std::function<std::string(const ExperimentConfig&)> get;
};

// Field accessors keep the table below to one line per key.
template <class Get>
Key real_key(std::string sec, std::string name, Get field)
{
    const std::string full = sec + "." + name;
    return {sec, name, [=](ExperimentConfig& c, const std::string& v) { field(c) = to_double(full, v); },
        [=](const ExperimentConfig& c) { return fmt(field(const_cast<ExperimentConfig&>(c))); }};
}

template <class Get>
Key count_key(std::string sec, std::string name, Get field)
{
    const std::string full = sec + "." + name;
    return {sec, name,
        [=](ExperimentConfig& c, const std::string& v) {
            field(c) = static_cast<std::remove_reference_t<decltype(field(c))>>(to_u64(full, v));
        },
        [=](const ExperimentConfig& c) { return std::to_string(field(const_cast<ExperimentConfig&>(c))); }};
}

template <class Get>
Key flag_key(std::string sec, std::string name, Get field)
{
    const std::string full = sec + "." + name;
    return {sec, name, [=](ExperimentConfig& c, const std::string& v) { field(c) = to_bool(full, v); },
        [=](const ExperimentConfig& c) { return std::string(field(const_cast<ExperimentConfig&>(c)) ? "true" : "false"); }};
}

template <class Get>
Key text_key(std::string sec, std::string name, Get field)
{
    return {sec, name, [=](ExperimentConfig& c, const std::string& v) { field(c) = v; },
        [=](const ExperimentConfig& c) { return field(const_cast<ExperimentConfig&>(c)); }};
}

void profile_keys(std::vector<Key>& keys, const std::string& sec, ProfileSpec ExperimentConfig::*member)
{
    keys.push_back(text_key(sec, "profile", [=](ExperimentConfig& c) -> std::string& { return (c.*member).kind; }));
    keys.push_back(real_key(sec, "amplitude", [=](ExperimentConfig& c) -> double& { return (c.*member).amplitude; }));
    keys.push_back(real_key(sec, "center", [=](ExperimentConfig& c) -> double& { return (c.*member).center; }));
    keys.push_back(real_key(sec, "width", [=](ExperimentConfig& c) -> double& { return (c.*member).width; }));
    keys.push_back(real_key(sec, "radius", [=](ExperimentConfig& c) -> double& { return (c.*member).radius; }));
    keys.push_back(real_key(sec, "decay", [=](ExperimentConfig& c) -> double& { return (c.*member).decay; }));
    keys.push_back(count_key(sec, "seed", [=](ExperimentConfig& c) -> std::uint64_t& { return (c.*member).seed; }));
    keys.push_back(text_key(sec, "file", [=](ExperimentConfig& c) -> std::string& { return (c.*member).file; }));
}

const std::vector<Key>& keys()
{
    static const std::vector<Key> table = [] {
        std::vector<Key> k;
        using C = ExperimentConfig&;
        k.push_back(real_key("grid", "L", [](C c) -> double& { return c.grid.L; }));
        k.push_back(count_key("grid", "nx", [](C c) -> std::size_t& { return c.grid.nx; }));
        k.push_back(real_key("grid", "t_max", [](C c) -> double& { return c.grid.t_max; }));
        k.push_back(count_key("grid", "nt", [](C c) -> std::size_t& { return c.grid.nt; }));
        k.push_back(count_key("grid", "pad_factor", [](C c) -> int& { return c.grid.pad_factor; }));
        profile_keys(k, "f", &ExperimentConfig::f);
        profile_keys(k, "g", &ExperimentConfig::g);
        profile_keys(k, "h1", &ExperimentConfig::h1);
        profile_keys(k, "h2", &ExperimentConfig::h2);
        k.push_back(real_key("data", "s", [](C c) -> double& { return c.s; }));
        k.push_back(text_key("data", "extension", [](C c) -> std::string& { return c.extension; }));
        k.push_back(real_key("solver", "b", [](C c) -> double& { return c.solver.b; }));
        k.push_back(real_key("solver", "T_init", [](C c) -> double& { return c.solver.T_init; }));
        k.push_back(real_key("solver", "theta", [](C c) -> double& { return c.solver.theta; }));
        k.push_back(count_key("solver", "max_iters", [](C c) -> std::size_t& { return c.solver.max_iters; }));
        k.push_back(real_key("solver", "fp_tol", [](C c) -> double& { return c.solver.fp_tol; }));
        k.push_back(real_key("solver", "a", [](C c) -> double& { return c.solver.a; }));
        k.push_back(flag_key("solver", "smoothing", [](C c) -> bool& { return c.solver.smoothing; }));
        k.push_back(flag_key("solver", "nonlinear", [](C c) -> bool& { return c.solver.nonlinear; }));
        k.push_back(real_key("kernel", "omega_cutoff", [](C c) -> double& { return c.solver.kernel.omega_cutoff; }));
        k.push_back(real_key("kernel", "omega_max", [](C c) -> double& { return c.solver.kernel.omega_max; }));
        k.push_back(count_key("kernel", "n_quad", [](C c) -> std::size_t& { return c.solver.kernel.n_quad; }));
        k.push_back(real_key("kernel", "tail_tol", [](C c) -> double& { return c.solver.kernel.tail_tol; }));
        k.push_back(flag_key("kernel", "check_convergence", [](C c) -> bool& { return c.solver.kernel.check_convergence; }));
        k.push_back(real_key("kernel", "convergence_tol", [](C c) -> double& { return c.solver.kernel.convergence_tol; }));
        k.push_back(count_key("experiment", "seeds", [](C c) -> std::size_t& { return c.experiment.seeds; }));
        k.push_back(count_key("experiment", "seed", [](C c) -> std::uint64_t& { return c.experiment.seed; }));
        k.push_back({"experiment", "s_values",
            [](C c, const std::string& v) { c.experiment.s_values = to_doubles("experiment.s_values", v); },
            [](const ExperimentConfig& c) { return join(c.experiment.s_values); }});
        k.push_back(real_key("experiment", "a", [](C c) -> double& { return c.experiment.a; }));
        k.push_back(real_key("experiment", "b", [](C c) -> double& { return c.experiment.b; }));
        k.push_back({"experiment", "cutoffs",
            [](C c, const std::string& v) { c.experiment.cutoffs = to_doubles("experiment.cutoffs", v); },
            [](const ExperimentConfig& c) { return join(c.experiment.cutoffs); }});
        k.push_back(text_key("experiment", "geometry", [](C c) -> std::string& { return c.experiment.geometry; }));
        k.push_back(count_key("experiment", "probes", [](C c) -> std::size_t& { return c.experiment.probes; }));
        k.push_back(real_key("experiment", "rel_tol", [](C c) -> double& { return c.experiment.rel_tol; }));
        k.push_back(real_key("experiment", "diverge_growth", [](C c) -> double& { return c.experiment.diverge_growth; }));
        k.push_back({"experiment", "extensions",
            [](C c, const std::string& v) { c.experiment.extensions = split(v); },
            [](const ExperimentConfig& c) { return join(c.experiment.extensions); }});
        k.push_back(real_key("experiment", "compare_x_max", [](C c) -> double& { return c.experiment.compare_x_max; }));
        k.push_back(count_key("experiment", "fd_refine", [](C c) -> std::size_t& { return c.experiment.fd_refine; }));
        k.push_back(real_key("experiment", "fd_courant", [](C c) -> double& { return c.experiment.fd_courant; }));
        k.push_back(count_key("experiment", "fd_damping", [](C c) -> std::size_t& { return c.experiment.fd_damping; }));
        k.push_back(real_key("experiment", "fd_x_max", [](C c) -> double& { return c.experiment.fd_x_max; }));
        k.push_back(text_key("output", "dir", [](C c) -> std::string& { return c.output_dir; }));
        return k;
    }();
    return table;
}

const Key& find_key(const std::string& section, const std::string& name)
{
    for (const auto& k : keys())
        if (k.section == section && k.name == name)
            return k;
    throw ConfigError("unknown config key '" + section + "." + name + "'");
}

void check_profile(const std::string& sec, const ProfileSpec& p, bool time_profile)
{
    static const std::vector<std::string> kinds{"zero", "gaussian", "bump", "rough", "file"};
    if (std::find(kinds.begin(), kinds.end(), p.kind) == kinds.end())
        throw ConfigError(sec + ".profile: unknown profile '" + p.kind + "'");
    if (time_profile && p.kind == "rough")
        throw ConfigError(sec + ".profile: rough profiles are spatial only");
    if (p.kind == "file" && p.file.empty())
        throw ConfigError(sec + ".file: required for profile = file");
    if (p.kind == "gaussian" && !(p.width > 0.0))
        throw ConfigError(sec + ".width must be positive");
    if (p.kind == "bump" && !(p.radius > 0.0))
        throw ConfigError(sec + ".radius must be positive");
}

void validate(const ExperimentConfig& c)
{
    c.grid.validate();
    check_profile("f", c.f, false);
    check_profile("g", c.g, false);
    check_profile("h1", c.h1, true);
    check_profile("h2", c.h2, true);
    parse_extension(c.extension);
    for (const auto& e : c.experiment.extensions)
        parse_extension(e);
    if (c.experiment.geometry != "box" && c.experiment.geometry != "parabolic")
        throw ConfigError("experiment.geometry must be box or parabolic");
    if (c.experiment.probes < 2)
        throw ConfigError("experiment.probes must be at least 2");
    if (!(c.experiment.rel_tol > 0.0))
        throw ConfigError("experiment.rel_tol must be positive");
    if (c.experiment.fd_refine < 1)
        throw ConfigError("experiment.fd_refine must be at least 1");
}

} // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"solve", "linear-verify", "kato", "bilinear", "supremum-sweep",
        "smoothing", "extension-independence", "oracle-compare"};
    return names;
}

void apply_override(ExperimentConfig& cfg, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    const auto dot = assignment.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
        throw ConfigError("override '" + assignment + "' is not of the form section.key=value");
    const std::string section = trim(assignment.substr(0, dot));
    const std::string name = trim(assignment.substr(dot + 1, eq - dot - 1));
    find_key(section, name).set(cfg, trim(assignment.substr(eq + 1)));
}

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    ExperimentConfig cfg;
    for (const auto& [section, body] : tree) {
        if (body.empty())
            throw ConfigError("config key '" + section + "' must sit inside a [section]");
        for (const auto& [name, value] : body)
            find_key(section, name).set(cfg, trim(value.data()));
    }
    for (const auto& o : overrides)
        apply_override(cfg, o);
    validate(cfg);
    return cfg;
}

std::string to_ini(const ExperimentConfig& cfg)
{
    std::string out;
    std::string current;
    for (const auto& k : keys()) {
        if (k.section != current) {
            out += (current.empty() ? "[" : "\n[") + k.section + "]\n";
            current = k.section;
        }
        out += k.name + " = " + k.get(cfg) + "\n";
    }
    return out;
}

std::function<double(double)> profile_function(const ProfileSpec& p, const GridSpec& grid)
{
    if (p.kind == "gaussian")
        return gaussian_profile(p.amplitude, p.center, p.width);
    if (p.kind == "bump")
        return bump_profile(p.amplitude, p.center, p.radius);
    if (p.kind == "rough")
        return rough_profile(grid, p.amplitude, p.decay, p.seed);
    if (p.kind == "file") {
        const auto table = read_two_column(p.file);
        return [table](double x) {
            if (x <= table.front().first)
                return table.front().second;
            if (x >= table.back().first)
                return table.back().second;
            const auto it = std::lower_bound(table.begin(), table.end(), x,
                [](const std::pair<double, double>& r, double v) { return r.first < v; });
            const auto& [x1, y1] = *it;
            const auto& [x0, y0] = *(it - 1);
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        };
    }
    return [](double) { return 0.0; };
}

IBVPData build_data(const ExperimentConfig& cfg)
{
    const GridSpec& grid = cfg.grid;
    IBVPData d;
    d.s = cfg.s;
    d.extension = parse_extension(cfg.extension);
    d.f = HalfLineFunction::sample(grid, profile_function(cfg.f, grid), cfg.s);
    d.g = HalfLineFunction::sample(grid, profile_function(cfg.g, grid), cfg.s - 1.0);
    const double st = (2.0 * cfg.s + 1.0) / 4.0;
    d.h1 = BoundarySignal::sample(grid.dt(), grid.nt, profile_function(cfg.h1, grid), st);
    // u_x(0, t) sits half an order lower in time regularity than u(0, t).
    d.h2 = BoundarySignal::sample(grid.dt(), grid.nt, profile_function(cfg.h2, grid), st - 0.5);
    d.validate();
    return d;
}

} // namespace hlb::cli
