#include <CLI11.hpp>
#include <boost/version.hpp>
#include <fftw3.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "hlb/cli.hpp"
#include "hlb/errors.hpp"

#ifndef HLB_VERSION
#define HLB_VERSION "unknown"
#endif

namespace hlb::cli {

namespace {

constexpr int kConfigExit = 2;
constexpr int kNumericalExit = 3;

std::filesystem::path output_dir(const std::string& flag, const ExperimentConfig& cfg)
{
    if (!flag.empty())
        return flag;
    if (!cfg.output_dir.empty())
        return cfg.output_dir;
    if (const char* env = std::getenv("HLB_OUTPUT_DIR"); env && *env)
        return env;
    return ".";
}

void write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out)
        throw ConfigError("cannot write '" + p.string() + "'");
}

} // namespace

std::string manifest(const ExperimentConfig& cfg, const Table& t)
{
    std::string m;
    m += "; hlb " HLB_VERSION "\n";
    m += "; fftw " + std::string(fftw_version) + ", boost " BOOST_LIB_VERSION "\n";
    m += "; command = " + cfg.command + "\n";
    m += "; rerun with: hlb " + cfg.command + " <this file>\n\n";
    m += to_ini(cfg);
    if (!t.summary.empty()) {
        m += "\n; results\n";
        for (const auto& [k, v] : t.summary)
            m += "; " + k + " = " + cell(v) + "\n";
    }
    return m;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Half-line good Boussinesq solver and estimate checks", "hlb"};
    app.require_subcommand(1);
    app.set_version_flag("--version", HLB_VERSION);
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_flag;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("config", config_path, "INI experiment file")->required();
        sub->add_option("--set", overrides, "override one key, as section.key=value (repeatable)");
        sub->add_option("--output", output_flag, "output directory (default: [output] dir, then $HLB_OUTPUT_DIR, then .)");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        err << "hlb: " << e.what() << "\n";
        return kConfigExit;
    }

    try {
        ExperimentConfig cfg = load_config(config_path, overrides);
        cfg.command = app.get_subcommands().front()->get_name();
        const Table table = run_command(cfg);
        const auto dir = output_dir(output_flag, cfg);
        std::filesystem::create_directories(dir);
        write_file(dir / (cfg.command + ".csv"), to_csv(table));
        write_file(dir / (cfg.command + ".manifest.txt"), manifest(cfg, table));
        out << "wrote " << (dir / (cfg.command + ".csv")).string() << "\n";
        return 0;
    } catch (const ConfigError& e) {
        err << "hlb: config error: " << e.what() << "\n";
        return kConfigExit;
    } catch (const DegenerateData& e) {
        err << "hlb: config error: " << e.what() << "\n";
        return kConfigExit;
    } catch (const NumericalFailure& e) {
        err << "hlb: numerical failure: " << e.what() << "\n";
        return kNumericalExit;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "hlb: " << e.what() << "\n";
        return kConfigExit;
    }
}

} // namespace hlb::cli
