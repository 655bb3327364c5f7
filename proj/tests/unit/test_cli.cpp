#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hlb/cli.hpp"
#include "hlb/errors.hpp"

namespace fs = std::filesystem;
using namespace hlb::cli;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("hlb_cli_test_" + tag))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

int invoke(std::vector<std::string> args, std::string* err_text = nullptr)
{
    args.insert(args.begin(), "hlb");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (err_text)
        *err_text = err.str();
    return code;
}

const char* kSmallSolve = R"([grid]
L = 20
nx = 128
t_max = 1
nt = 32

[f]
profile = gaussian
amplitude = 0.05
center = 5
width = 1
)";

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("zero data solve writes one converged row")
    {
        TempDir d("zero");
        write(d.path / "zero.ini", "[grid]\nL = 20\nnx = 64\nt_max = 1\nnt = 16\n");
        CHECK(invoke({"solve", (d.path / "zero.ini").string(), "--output", (d.path / "out").string()}) == 0);
        const std::string csv = slurp(d.path / "out" / "solve.csv");
        CHECK(csv.rfind("iter,diff_norm,contraction_factor,T\n", 0) == 0);
        std::istringstream lines(csv);
        std::string header, row, extra;
        std::getline(lines, header);
        std::getline(lines, row);
        CHECK(row.rfind("1,0,", 0) == 0);
        CHECK_FALSE(std::getline(lines, extra));
        CHECK(fs::exists(d.path / "out" / "solve.manifest.txt"));
    }

    TEST_CASE("bad flags and unknown keys exit 2 and write nothing")
    {
        TempDir d("bad");
        write(d.path / "c.ini", kSmallSolve);
        const auto out = (d.path / "out").string();
        std::string err;
        CHECK(invoke({"solve", (d.path / "c.ini").string(), "--bogus", "--output", out}, &err) == 2);
        CHECK_FALSE(err.empty());
        CHECK(invoke({"solve", (d.path / "c.ini").string(), "--set", "grid.foo=1", "--output", out}) == 2);
        CHECK(invoke({"solve", (d.path / "missing.ini").string(), "--output", out}) == 2);
        write(d.path / "typo.ini", std::string(kSmallSolve) + "widht = 2\n");
        CHECK(invoke({"solve", (d.path / "typo.ini").string(), "--output", out}) == 2);
        CHECK(invoke({"no-such-command", (d.path / "c.ini").string()}) == 2);
        CHECK_FALSE(fs::exists(d.path / "out" / "solve.csv"));
    }

    TEST_CASE("reruns are byte-identical and the manifest reproduces the run")
    {
        TempDir d("rerun");
        write(d.path / "c.ini", kSmallSolve);
        const auto a = (d.path / "a").string();
        const auto b = (d.path / "b").string();
        const auto c = (d.path / "c").string();
        REQUIRE(invoke({"solve", (d.path / "c.ini").string(), "--set", "solver.fp_tol=1e-10", "--output", a}) == 0);
        REQUIRE(invoke({"solve", (d.path / "c.ini").string(), "--set", "solver.fp_tol=1e-10", "--output", b}) == 0);
        CHECK(slurp(d.path / "a" / "solve.csv") == slurp(d.path / "b" / "solve.csv"));
        REQUIRE(invoke({"solve", (d.path / "a" / "solve.manifest.txt").string(), "--output", c}) == 0);
        CHECK(slurp(d.path / "a" / "solve.csv") == slurp(d.path / "c" / "solve.csv"));
        const std::string m = slurp(d.path / "a" / "solve.manifest.txt");
        CHECK(m.find("fp_tol = 1e-10") != std::string::npos);
        CHECK(m.find("; results") != std::string::npos);
    }

    TEST_CASE("overrides: lists, types and validation")
    {
        TempDir d("override");
        write(d.path / "c.ini", kSmallSolve);
        auto cfg = load_config((d.path / "c.ini").string(), {"experiment.s_values=-0.4, 0", "data.s=0.25"});
        CHECK(cfg.experiment.s_values == std::vector<double>{-0.4, 0.0});
        CHECK(cfg.s == 0.25);
        CHECK(cfg.grid.nx == 128);
        CHECK(cfg.f.kind == "gaussian");
        CHECK_THROWS_AS(apply_override(cfg, "grid.nx=abc"), hlb::ConfigError);
        CHECK_THROWS_AS(apply_override(cfg, "nosection"), hlb::ConfigError);
        CHECK_THROWS_AS(load_config((d.path / "c.ini").string(), {"h1.profile=rough"}), hlb::ConfigError);
        // to_ini round-trips through the loader.
        write(d.path / "back.ini", to_ini(cfg));
        const auto again = load_config((d.path / "back.ini").string(), {});
        CHECK(to_ini(again) == to_ini(cfg));
    }

    TEST_CASE("cells round-trip doubles with the fewest digits")
    {
        CHECK(cell(0.6) == "0.6");
        CHECK(cell(1e-10) == "1e-10");
        CHECK(cell(3.0) == "3");
        const double v = 0.1 + 0.2;
        CHECK(std::stod(cell(v)) == v);
    }

    TEST_CASE("supremum sweep marks growth above the threshold")
    {
        TempDir d("sweep");
        write(d.path / "s.ini", "[experiment]\ns_values = -0.4\na = 0\nb = 0.49\ncutoffs = 10, 20\nprobes = 7\ndiverge_growth = 0.1\n");
        REQUIRE(invoke({"supremum-sweep", (d.path / "s.ini").string(), "--output", d.path.string()}) == 0);
        std::istringstream csv(slurp(d.path / "supremum-sweep.csv"));
        std::string header, first, second;
        std::getline(csv, header);
        std::getline(csv, first);
        std::getline(csv, second);
        CHECK(header == "s,a,b,cutoff,supremum,xi_star,tau_star,growth,diverging");
        CHECK(first.substr(first.rfind(',') + 1) == "0");
        CHECK(second.substr(second.rfind(',') + 1) == "1");
    }

    TEST_CASE("every command is reachable")
    {
        const auto& names = command_names();
        for (const char* n : {"solve", "linear-verify", "kato", "bilinear", "supremum-sweep", "smoothing",
                 "extension-independence", "oracle-compare"})
            CHECK(std::find(names.begin(), names.end(), n) != names.end());
    }
}
