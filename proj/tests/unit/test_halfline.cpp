#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "hlb/errors.hpp"
#include "hlb/halfline.hpp"

using namespace hlb;

namespace {

const GridSpec kGrid{20.0, 256, 1.0, 8};

HalfLineFunction random_halfline(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HalfLineFunction h{kGrid, std::vector<double>(kGrid.nx / 2), 0.0};
    for (std::size_t i = 0; i < h.samples.size(); ++i)
        h.samples[i] = u(rng) * std::exp(-0.3 * static_cast<double>(i));
    return h;
}

double halfline_l2(const HalfLineFunction& h)
{
    double acc = 0.0;
    for (double v : h.samples)
        acc += v * v;
    return std::sqrt(acc * h.grid.dx());
}

} // namespace

TEST_SUITE("halfline")
{
    TEST_CASE("reflected extensions of exp(-x^2) stay within 4x of the surrogate H^1 norm")
    {
        const auto h = HalfLineFunction::sample(kGrid, [](double x) { return std::exp(-x * x); });
        const double surrogate = halfline_norm(h, 1.0);
        for (auto m : {ExtensionMethod::even_reflection, ExtensionMethod::smooth_decay_reflection}) {
            const double n = sobolev_norm(extend(h, m), 1.0);
            CHECK(n <= 4.0 * surrogate);
            CHECK(surrogate <= 4.0 * n);
        }
    }

    TEST_CASE("chi-norm ratio of t exp(-t) at s = 1 is stable under refinement")
    {
        auto report = [](std::size_t n) {
            const double dt = 40.0 / static_cast<double>(n);
            return chi_norm_check(BoundarySignal::sample(dt, n, [](double t) { return t * std::exp(-t); }), 1.0);
        };
        const auto coarse = report(512);
        const auto fine = report(1024);
        CHECK(std::isfinite(coarse.ratio));
        CHECK(!coarse.degenerate);
        CHECK(std::abs(fine.ratio / coarse.ratio - 1.0) < 0.10);
    }

    TEST_CASE("restrict after extend is the identity for every method")
    {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto h = random_halfline(seed);
            for (auto m : {ExtensionMethod::zero, ExtensionMethod::even_reflection, ExtensionMethod::smooth_decay_reflection})
                CHECK(restrict_to_halfline(extend(h, m)).samples == h.samples);
        }
    }

    TEST_CASE("zero extension keeps the L2 norm")
    {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto h = random_halfline(seed);
            CHECK(hlb::testing::rel_diff(sobolev_norm(extend(h, ExtensionMethod::zero), 0.0), halfline_l2(h)) < 1e-10);
        }
    }

    TEST_CASE("compatibility verdict is unchanged by common scaling")
    {
        auto data = [](double c, double f0, double h0) {
            const auto f = HalfLineFunction::sample(kGrid, [=](double x) { return c * f0 * std::exp(-x * x); });
            const auto h1 = BoundarySignal::sample(0.01, 64, [=](double t) { return c * h0 * std::exp(-t); });
            return check_compatibility(f, h1, BoundarySignal::zeros(0.01, 64), 1.0).pass;
        };
        for (double c : {0.5, 2.0, 10.0}) {
            CHECK(data(c, 1.0, 1.0) == data(1.0, 1.0, 1.0));
            CHECK(data(c, 1.0, 1.5) == data(1.0, 1.0, 1.5));
        }
    }

    TEST_CASE("zero extension of data supported in [1, 2]")
    {
        auto bump = [](double x) { return (x > 1.0 && x < 2.0) ? std::sin(std::numbers::pi * (x - 1.0)) : 0.0; };
        const Field e = extend(HalfLineFunction::sample(kGrid, bump), ExtensionMethod::zero);
        for (std::size_t j = 0; j < kGrid.nx; ++j)
            CHECK(e.values[j].real() == bump(kGrid.x(j)));
    }

    TEST_CASE("even reflection is symmetric")
    {
        const Field e = extend(HalfLineFunction::sample(kGrid, [](double x) { return (1.0 + x) * std::exp(-x * x); }), ExtensionMethod::even_reflection);
        const std::size_t z = kGrid.zero_index();
        for (std::size_t i = 1; i < z; ++i)
            CHECK(e.values[z - i] == e.values[z + i]);
    }

    TEST_CASE("restricting zero gives zero")
    {
        for (double v : restrict_to_halfline(Field(kGrid)).samples)
            CHECK(v == 0.0);
    }

    TEST_CASE("slowly decaying data is rejected")
    {
        const auto h = HalfLineFunction::sample(kGrid, [](double) { return 1.0; });
        CHECK_THROWS_AS(extend(h, ExtensionMethod::zero), TailViolation);
    }

    TEST_CASE("chi-norm check edge cases")
    {
        CHECK(chi_norm_check(BoundarySignal::zeros(0.01, 100), 1.0).degenerate);
        CHECK_THROWS_AS(chi_norm_check(BoundarySignal::sample(0.01, 100, [](double t) { return std::exp(-t); }), 1.0),
            CompatibilityViolation);
        CHECK_THROWS_AS(chi_norm_check(BoundarySignal::zeros(0.01, 100), 0.5), RangeViolation);
    }

    TEST_CASE("compatibility examples")
    {
        const auto one = HalfLineFunction::sample(kGrid, [](double x) { return std::exp(-x * x); });
        const auto zero = HalfLineFunction::sample(kGrid, [](double x) { return x * std::exp(-x * x); });
        const auto h1 = BoundarySignal::sample(0.01, 64, [](double t) { return std::exp(-t); });
        const auto h2 = BoundarySignal::zeros(0.01, 64);
        CHECK(check_compatibility(one, h1, h2, 1.0).pass);
        CHECK_FALSE(check_compatibility(zero, h1, h2, 1.0).pass);
        CHECK(check_compatibility(zero, h1, h2, 0.3).pass);
        // Above s = 3/2 the slopes must match too: f'(0) = 1 for x exp(-x^2).
        // The one-sided slope is second order in dx, so this part uses a fine grid.
        const GridSpec fine{20.0, 4096, 1.0, 8};
        const auto zf = HalfLineFunction::sample(fine, [](double x) { return x * std::exp(-x * x); });
        const auto h1z = BoundarySignal::zeros(0.01, 64);
        const auto h2one = BoundarySignal::sample(0.01, 64, [](double) { return 1.0; });
        CHECK(check_compatibility(zf, h1z, h2one, 2.0, 1e-3).pass);
        CHECK_FALSE(check_compatibility(zf, h1z, h2, 2.0, 1e-3).pass);
    }

    TEST_CASE("extension names parse both spellings")
    {
        CHECK(parse_extension("smooth-decay-reflection") == ExtensionMethod::smooth_decay_reflection);
        CHECK(parse_extension("even_reflection") == ExtensionMethod::even_reflection);
        CHECK_THROWS_AS(parse_extension("odd"), ConfigError);
    }

    TEST_CASE("two-column files interpolate onto the grid")
    {
        const std::string path = "halfline_table_test.txt";
        {
            std::ofstream out(path);
            out << "# x value\n0 0\n1 2\n2 0\n";
        }
        const auto h = halfline_from_table(kGrid, read_two_column(path));
        CHECK(h.samples[0] == 0.0);
        const std::size_t i = static_cast<std::size_t>(std::lround(0.5 / kGrid.dx()));
        CHECK(h.samples[i] == doctest::Approx(2.0 * kGrid.dx() * static_cast<double>(i)));
        std::remove(path.c_str());
        CHECK_THROWS_AS(read_two_column("no_such_file.txt"), ConfigError);
    }
}
