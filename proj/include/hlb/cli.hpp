#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hlb/fd_oracle.hpp"
#include "hlb/picard.hpp"
#include "hlb/xsb.hpp"

namespace hlb::cli {

/// One built-in or file-backed data profile. For [h1]/[h2] the argument is t.
struct ProfileSpec {
    std::string kind = "zero"; ///< zero | gaussian | bump | rough | file
    double amplitude = 0.0;
    double center = 0.0;
    double width = 1.0;
    double radius = 1.0;
    double decay = 0.6;
    std::uint64_t seed = 1;
    std::string file;
};

struct ExperimentSettings {
    std::size_t seeds = 10;
    std::uint64_t seed = 1;
    std::vector<double> s_values{-0.4, -0.2, 0.0, 0.25};
    double a = 0.4;
    double b = 0.45;
    std::vector<double> cutoffs{40.0, 80.0};
    std::string geometry = "parabolic";
    std::size_t probes = 33;
    double rel_tol = 1e-4;
    double diverge_growth = 0.5;
    std::vector<std::string> extensions{"zero", "smooth_decay_reflection"};
    double compare_x_max = 0.0; ///< 0 means L/4
    std::size_t fd_refine = 8;
    double fd_courant = 0.4;
    std::size_t fd_damping = 40;
    double fd_x_max = 0.0; ///< 0 means L
};

struct ExperimentConfig {
    std::string command;
    GridSpec grid{40.0, 512, 2.0, 128, 2, 0.0};
    ProfileSpec f, g, h1, h2;
    double s = 0.0;
    std::string extension = "smooth_decay_reflection";
    SolverConfig solver;
    ExperimentSettings experiment;
    std::string output_dir;
};

/// Names accepted as subcommands.
const std::vector<std::string>& command_names();

/// Reads an INI file and applies "section.key=value" overrides on top.
/// Unknown sections or keys throw ConfigError.
ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

/// Applies one "section.key=value" assignment.
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

/// Complete INI rendering of every key; feeding it back reproduces `cfg`.
std::string to_ini(const ExperimentConfig& cfg);

/// Builds validated IBVP data from the [f], [g], [h1], [h2] and [data] sections.
IBVPData build_data(const ExperimentConfig& cfg);

/// Callable view of a profile, for the finite-difference oracle.
std::function<double(double)> profile_function(const ProfileSpec& p, const GridSpec& grid);

/// Shortest round-trip decimal form, so reruns are byte-identical.
std::string cell(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Summary lines appended to the manifest.
    std::vector<std::pair<std::string, double>> summary;
};

/// Runs one subcommand. Throws ConfigError / NumericalFailure on failure.
Table run_command(const ExperimentConfig& cfg);

/// CSV text, header first.
std::string to_csv(const Table& t);

/// Manifest text: resolved config plus version and result comments.
std::string manifest(const ExperimentConfig& cfg, const Table& t);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hlb::cli
