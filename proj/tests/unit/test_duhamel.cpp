#include <doctest.h>

#include "helpers.hpp"
#include "hlb/duhamel.hpp"
#include "hlb/linear_flow.hpp"

using namespace hlb;

namespace {

SpaceTimeField constant_in_time(const GridSpec& g, const Field& f)
{
    SpaceTimeField u(g);
    for (std::size_t n = 0; n < g.nt; ++n)
        u.set_slice(n, f);
    return u;
}

// max over modes of |D(t_n) - e^{i xi0 x}(1 - cos(t phi))/phi^2|
double single_mode_error(std::size_t nt)
{
    const GridSpec g{10.0, 64, 1.0, nt};
    const double xi0 = g.xi(6);
    const double phi = dispersion(xi0);
    const Field mode = Field::sample_complex(g, [&](double x) { return std::exp(cplx(0.0, xi0 * x)); });
    const SpaceTimeField D = duhamel_integral(constant_in_time(g, mode));
    double err = 0.0;
    for (std::size_t n = 0; n < g.nt; ++n) {
        const double amp = (1.0 - std::cos(g.t(n) * phi)) / (phi * phi);
        for (std::size_t j = 0; j < g.nx; ++j)
            err = std::max(err, std::abs(D.at(n, j) - amp * mode.values[j]));
    }
    return err;
}

SpaceTimeField random_forcing(const GridSpec& g, std::uint64_t seed)
{
    const Field a = hlb::testing::random_band_limited(g, seed, 3.0);
    const Field b = hlb::testing::random_band_limited(g, seed + 1, 3.0);
    SpaceTimeField G(g);
    for (std::size_t n = 0; n < g.nt; ++n) {
        const double t = g.t(n);
        for (std::size_t j = 0; j < g.nx; ++j)
            G.at(n, j) = a.values[j] * std::cos(2.0 * t) + b.values[j] * t * t;
    }
    return G;
}

// Centred second difference of D in time against G - D_xx... rearranged as
// D_tt + (-D_xx + D_xxxx) - G, at an interior time node.
double duhamel_residual(std::size_t nt)
{
    const GridSpec g{10.0, 64, 1.0, nt};
    const SpaceTimeField G = random_forcing(g, 3);
    const SpaceTimeField D = duhamel_integral(G);
    const std::size_t n = nt / 2;
    const Field d = D.slice(n);
    const Field dxx = spectral_derivative(d, 2);
    const Field dxxxx = spectral_derivative(d, 4);
    const double h = g.dt();
    double r = 0.0;
    for (std::size_t j = 0; j < g.nx; ++j) {
        const cplx dtt = (D.at(n + 1, j) - 2.0 * D.at(n, j) + D.at(n - 1, j)) / (h * h);
        r = std::max(r, std::abs(dtt - dxx.values[j] + dxxxx.values[j] - G.at(n, j)));
    }
    return r;
}

} // namespace

TEST_SUITE("duhamel")
{
    TEST_CASE("single mode matches the closed-form time integral at fourth order")
    {
        const double e1 = single_mode_error(32);
        const double e2 = single_mode_error(64);
        const double e3 = single_mode_error(128);
        CHECK(e3 < 1e-8);
        CHECK(std::log2(e1 / e2) > 3.5);
        CHECK(std::log2(e2 / e3) > 3.5);
    }

    TEST_CASE("squaring matches a direct spectral convolution")
    {
        const GridSpec g{10.0, 64, 1.0, 8};
        const Field u = hlb::testing::random_band_limited(g, 4, 0.3 * g.nx / 2 * g.dxi());
        const SpaceTimeField N = nonlinearity(constant_in_time(g, u), 0.0);
        const auto U = forward_transform(u);
        const auto got = forward_transform(N.slice(0));
        double err = 0.0;
        double scale = 0.0;
        for (std::size_t k = 0; k < g.nx; ++k) {
            const long sk = signed_index(k, g.nx);
            cplx acc = 0.0;
            for (std::size_t a = 0; a < g.nx; ++a) {
                const long sb = sk - signed_index(a, g.nx);
                if (sb < -static_cast<long>(g.nx / 2) || sb >= static_cast<long>(g.nx / 2))
                    continue;
                acc += U.coeffs[a] * U.coeffs[sb >= 0 ? sb : static_cast<long>(g.nx) + sb];
            }
            const double xi = g.xi(k);
            acc *= -xi * xi * g.dxi() / (2.0 * std::numbers::pi);
            err = std::max(err, std::abs(acc - got.coeffs[k]));
            scale = std::max(scale, std::abs(acc));
        }
        CHECK(err < 1e-9 * scale);
    }

    TEST_CASE("cos(kx) squared and differentiated twice is -2k^2 cos(2kx)")
    {
        const GridSpec g{4.0 * std::numbers::pi, 128, 1.0, 8};
        const double k = 1.5;
        const Field u = Field::sample(g, [&](double x) { return std::cos(k * x); });
        const SpaceTimeField N = nonlinearity(constant_in_time(g, u), 0.0);
        double err = 0.0;
        for (std::size_t j = 0; j < g.nx; ++j)
            err = std::max(err, std::abs(N.at(0, j) + 2.0 * k * k * std::cos(2.0 * k * g.x(j))));
        CHECK(err < 1e-10);
    }

    TEST_CASE("Duhamel identity holds to second order in the time difference")
    {
        const double r1 = duhamel_residual(64);
        const double r2 = duhamel_residual(128);
        CHECK(r1 / r2 >= 3.5);
    }

    TEST_CASE("nothing survives above two thirds of Nyquist")
    {
        const GridSpec g{10.0, 128, 1.0, 8};
        std::mt19937_64 rng(9);
        std::normal_distribution<double> nd;
        SpaceTimeField u(g);
        for (auto& v : u.values)
            v = nd(rng);
        const SpaceTimeField N = nonlinearity(u, 0.0);
        const double cut = (2.0 / 3.0) * (g.nx / 2) * g.dxi();
        double tail = 0.0;
        double total = 0.0;
        for (std::size_t n = 0; n < g.nt; ++n) {
            const auto S = forward_transform(N.slice(n));
            for (std::size_t k = 0; k < g.nx; ++k) {
                total += std::norm(S.coeffs[k]);
                if (std::abs(g.xi(k)) > cut)
                    tail += std::norm(S.coeffs[k]);
            }
        }
        CHECK(std::sqrt(tail) < 1e-13 * std::sqrt(total));
    }

    TEST_CASE("linear in G")
    {
        const GridSpec g{10.0, 64, 1.0, 32};
        const SpaceTimeField a = random_forcing(g, 1);
        const SpaceTimeField b = random_forcing(g, 7);
        const SpaceTimeField lhs = duhamel_integral(2.0 * a + (-0.5) * b);
        const SpaceTimeField rhs = 2.0 * duhamel_integral(a) + (-0.5) * duhamel_integral(b);
        CHECK((lhs - rhs).max_abs() < 1e-12 * rhs.max_abs());
    }

    TEST_CASE("even forcing has no slope trace")
    {
        const GridSpec g{10.0, 64, 1.0, 32};
        SpaceTimeField G(g);
        for (std::size_t n = 0; n < g.nt; ++n)
            for (std::size_t j = 0; j < g.nx; ++j)
                G.at(n, j) = std::exp(-g.x(j) * g.x(j)) * (1.0 + g.t(n));
        const auto tr = duhamel_traces(G, 0.5);
        for (double v : tr.p2.values)
            CHECK(std::abs(v) < 1e-8);
        CHECK(tr.p1.values[0] == 0.0);
        CHECK(tr.p2.values[0] == 0.0);
    }

    TEST_CASE("zero forcing and the empty integral at t = 0")
    {
        const GridSpec g{10.0, 64, 1.0, 16};
        CHECK(duhamel_integral(SpaceTimeField(g)).max_abs() == 0.0);
        CHECK(nonlinearity(SpaceTimeField(g), 0.5).max_abs() == 0.0);
        const auto tr = duhamel_traces(SpaceTimeField(g), 0.5);
        for (double v : tr.p1.values)
            CHECK(v == 0.0);
        const SpaceTimeField D = duhamel_integral(random_forcing(g, 2));
        for (std::size_t j = 0; j < g.nx; ++j)
            CHECK(D.at(0, j) == cplx{});
    }

    TEST_CASE("fused multiplier values")
    {
        CHECK(m_fused_multiplier(0.0) == 0.0);
        CHECK(m_fused_multiplier(1.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        double prev = 0.0;
        for (double xi = 0.5; xi < 1e4; xi *= 2.0) {
            const double m = m_fused_multiplier(xi);
            CHECK(m > prev);
            CHECK(m < 1.0);
            CHECK(m_fused_multiplier(-xi) == m);
            prev = m;
        }
        CHECK(m_fused_multiplier(1e8) == doctest::Approx(1.0).epsilon(1e-12));
    }
}
