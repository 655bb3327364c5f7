#include <doctest.h>

#include "helpers.hpp"
#include "hlb/errors.hpp"
#include "hlb/fd_oracle.hpp"
#include "hlb/linear_flow.hpp"

using namespace hlb;

namespace {

const GridSpec kOut{20.0, 128, 1.0, 16};

// u = cos(t) exp(-(x - 3)^2) solves the nonlinear equation with the forcing below.
double exact(double x, double t)
{
    const double y = x - 3.0;
    return std::cos(t) * std::exp(-y * y);
}

FDProblem manufactured()
{
    FDProblem p;
    p.f = [](double x) { return exact(x, 0.0); };
    p.u_t0 = [](double) { return 0.0; };
    p.h1 = [](double t) { return exact(0.0, t); };
    p.h2 = [](double t) { return 6.0 * exact(0.0, t); };
    p.forcing = [](double x, double t) {
        const double y = x - 3.0;
        const double y2 = y * y;
        const double c = std::cos(t);
        const double e = std::exp(-y2);
        const double utt = -c * e;
        const double uxx = c * e * (4.0 * y2 - 2.0);
        const double uxxxx = c * e * (16.0 * y2 * y2 - 48.0 * y2 + 12.0);
        const double sq_xx = c * c * e * e * (16.0 * y2 - 4.0);
        return utt - uxx + uxxxx + sq_xx;
    };
    return p;
}

double manufactured_error(std::size_t refine)
{
    const SpaceTimeField u = fd_solve(manufactured(), fd_grid_for(kOut, 20.0, refine), kOut);
    double err = 0.0;
    for (std::size_t n = 0; n < kOut.nt; ++n)
        for (std::size_t j = kOut.zero_index(); kOut.x(j) <= 10.0; ++j)
            err = std::max(err, std::abs(u.at(n, j).real() - exact(kOut.x(j), kOut.t(n))));
    return err;
}

FDProblem gaussian(double centre, double width)
{
    FDProblem p;
    p.f = [=](double x) { return std::exp(-(x - centre) * (x - centre) / (width * width)); };
    p.u_t0 = [](double) { return 0.0; };
    p.h1 = [](double) { return 0.0; };
    p.h2 = [](double) { return 0.0; };
    p.nonlinear = 0.0;
    return p;
}

} // namespace

TEST_SUITE("fd_oracle")
{
    TEST_CASE("manufactured solution converges at second order")
    {
        const double e1 = manufactured_error(2);
        const double e2 = manufactured_error(4);
        const double e3 = manufactured_error(8);
        CHECK(std::log2(e1 / e2) >= 1.9);
        CHECK(std::log2(e2 / e3) >= 1.9);
        CHECK(e3 < 1e-3);
    }

    TEST_CASE("linear regime matches the exact free flow away from the boundary")
    {
        const GridSpec out{20.0, 128, 0.5, 8};
        const FDProblem p = gaussian(10.0, 2.0);
        const SpaceTimeField u = fd_solve(p, fd_grid_for(out, 20.0, 16), out);
        const Field f = Field::sample(out, p.f);
        const Field w = free_propagate(f, Field(out), out.t(out.nt - 1));
        double err = 0.0;
        double scale = 0.0;
        for (std::size_t j = out.zero_index(); out.x(j) <= 15.0; ++j) {
            err = std::max(err, std::abs(u.at(out.nt - 1, j).real() - w.values[j].real()));
            scale = std::max(scale, std::abs(w.values[j]));
        }
        CHECK(err < 1e-5 * scale);
    }

    TEST_CASE("zero data stays zero")
    {
        FDProblem p = gaussian(5.0, 1.0);
        p.f = [](double) { return 0.0; };
        p.nonlinear = 1.0;
        CHECK(fd_solve(p, fd_grid_for(kOut, 20.0, 2), kOut).max_abs() == 0.0);
    }

    TEST_CASE("steps at the pinned Courant number stay bounded; larger steps are refused")
    {
        FDProblem p = gaussian(5.0, 1.0);
        p.nonlinear = 1.0;
        GridSpec out = kOut;
        out.t_max = 4.0;
        out.nt = 64;
        FDGrid g = fd_grid_for(out, 20.0, 2, kStabilityConstant);
        CHECK(g.dt <= kStabilityConstant * g.dx() * g.dx());
        const SpaceTimeField u = fd_solve(p, g, out);
        CHECK(u.max_abs() < 2.0);
        g.dt = 0.55 * g.dx() * g.dx();
        CHECK_THROWS_AS(g.validate(), ConfigError);
    }

    TEST_CASE("the sponge does not reach back into the interior")
    {
        const FDProblem p = gaussian(5.0, 1.0);
        const SpaceTimeField a = fd_solve(p, fd_grid_for(kOut, 20.0, 4), kOut);
        GridSpec wide = kOut;
        wide.L = 40.0;
        wide.nx = 256;
        const SpaceTimeField b = fd_solve(p, fd_grid_for(wide, 40.0, 4), wide);
        double diff = 0.0;
        for (std::size_t n = 0; n < kOut.nt; ++n)
            for (std::size_t j = kOut.zero_index(); kOut.x(j) <= 10.0; ++j) {
                const std::size_t jw = wide.zero_index() + (j - kOut.zero_index());
                diff = std::max(diff, std::abs(a.at(n, j) - b.at(n, jw)));
            }
        CHECK(diff < 1e-6);
    }

    TEST_CASE("linear energy drifts by less than one percent")
    {
        const FDProblem p = gaussian(6.0, 1.0);
        const auto e = fd_linear_energy(p, fd_grid_for(kOut, 20.0, 4), kOut, 15.0);
        REQUIRE(e.size() > 2);
        for (double v : e)
            CHECK(std::abs(v / e.front() - 1.0) < 0.01);
    }

    TEST_CASE("grid layout")
    {
        const FDGrid g = fd_grid_for(kOut, 20.0, 4);
        CHECK(g.dx() == doctest::Approx(kOut.dx() / 4.0));
        const double q = kOut.dt() / g.dt;
        CHECK(std::abs(q - std::round(q)) < 1e-9);
        FDGrid bad = g;
        bad.M_x = 8;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        GridSpec shifted = kOut;
        shifted.t_origin = -1.0;
        CHECK_THROWS_AS(fd_solve(gaussian(5.0, 1.0), g, shifted), ConfigError);
    }
}
