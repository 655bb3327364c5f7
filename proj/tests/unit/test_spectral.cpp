#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "helpers.hpp"
#include "hlb/errors.hpp"
#include "hlb/spectral.hpp"

using namespace hlb;
using hlb::testing::random_band_limited;
using hlb::testing::random_smooth_field;
using hlb::testing::rel_diff;

TEST_SUITE("spectral")
{
    // Oracles first: closed forms and independent quadrature.

    TEST_CASE("Gaussian transform matches sqrt(2 pi) exp(-xi^2/2)")
    {
        const GridSpec g{12.0, 256, 1.0, 8};
        const auto F = forward_transform(Field::sample(g, [](double x) { return std::exp(-0.5 * x * x); }));
        double err = 0.0;
        for (std::size_t k = 0; k < g.nx; ++k) {
            const double xi = g.xi(k);
            err = std::max(err, std::abs(F.coeffs[k] - std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * xi * xi)));
        }
        CHECK(err < 1e-8);
    }

    TEST_CASE("H^1 norm of a Gaussian matches fine quadrature of its weighted transform")
    {
        const GridSpec g{16.0, 512, 1.0, 8};
        const double got = sobolev_norm(Field::sample(g, [](double x) { return std::exp(-0.5 * x * x); }), 1.0);
        // int <xi>^2 |sqrt(2 pi) e^{-xi^2/2}|^2 dxi / (2 pi)
        const double sq = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [](double xi) { return (1.0 + xi * xi) * std::exp(-xi * xi); }, -40.0, 40.0, 15, 1e-14);
        CHECK(rel_diff(got, std::sqrt(sq)) < 1e-6);
    }

    TEST_CASE("multiplier <xi>^-2 agrees with a direct Fourier sum")
    {
        const GridSpec g{10.0, 128, 1.0, 8};
        const Field f = random_band_limited(g, 7, 5.0);
        const auto F = forward_transform(f);
        const Field got = inverse_transform(apply_multiplier(F, [](double xi) { return cplx(1.0 / (1.0 + xi * xi)); }));
        double err = 0.0;
        double scale = 0.0;
        for (std::size_t j = 0; j < g.nx; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < g.nx; ++k) {
                const double xi = g.xi(k);
                acc += F.coeffs[k] / (1.0 + xi * xi) * std::exp(cplx(0.0, xi * g.x(j)));
            }
            acc *= g.dxi() / (2.0 * std::numbers::pi);
            err = std::max(err, std::abs(acc - got.values[j]));
            scale = std::max(scale, std::abs(acc));
        }
        CHECK(err < 1e-10 * scale);
    }

    TEST_CASE("i xi applied to sin(x) gives cos(x)")
    {
        const GridSpec g{4.0 * std::numbers::pi, 128, 1.0, 8};
        const Field f = Field::sample(g, [](double x) { return std::sin(x); });
        const Field d = inverse_transform(apply_multiplier(forward_transform(f), [](double xi) { return cplx(0.0, xi); }));
        double err = 0.0;
        for (std::size_t j = 0; j < g.nx; ++j)
            err = std::max(err, std::abs(d.values[j] - std::cos(g.x(j))));
        CHECK(err < 1e-10);
    }

    // Invariants.

    TEST_CASE("round trip is the identity on random fields")
    {
        const GridSpec g{20.0, 256, 1.0, 8};
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Field f = random_smooth_field(g, seed);
            const Field back = inverse_transform(forward_transform(f));
            double err = 0.0;
            for (std::size_t j = 0; j < g.nx; ++j)
                err = std::max(err, std::abs(back.values[j] - f.values[j]));
            CHECK(err < 1e-12 * f.max_abs());
        }
    }

    TEST_CASE("Parseval: spectrum norm equals sample L2 norm")
    {
        const GridSpec g{20.0, 256, 1.0, 8};
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Field f = random_smooth_field(g, seed);
            CHECK(rel_diff(sobolev_norm(f, 0.0), l2_norm_samples(f)) < 1e-10);
        }
    }

    TEST_CASE("sobolev_norm is monotone in s")
    {
        const GridSpec g{20.0, 256, 1.0, 8};
        const Field f = random_smooth_field(g, 3);
        double prev = 0.0;
        for (double s = -1.0; s <= 2.0; s += 0.25) {
            const double v = sobolev_norm(f, s);
            CHECK(v >= prev);
            prev = v;
        }
    }

    TEST_CASE("apply_multiplier is linear")
    {
        const GridSpec g{20.0, 256, 1.0, 8};
        const auto F = forward_transform(random_smooth_field(g, 1));
        const auto G = forward_transform(random_smooth_field(g, 2));
        const cplx alpha{0.7, -0.2};
        const double beta = -1.3;
        auto m = [](double xi) { return cplx(std::cos(xi), xi * xi); };
        Spectrum mix{g, std::vector<cplx>(g.nx)};
        for (std::size_t k = 0; k < g.nx; ++k)
            mix.coeffs[k] = alpha * F.coeffs[k] + beta * G.coeffs[k];
        const auto lhs = apply_multiplier(mix, m);
        const auto mf = apply_multiplier(F, m);
        const auto mg = apply_multiplier(G, m);
        double err = 0.0;
        double scale = 0.0;
        for (std::size_t k = 0; k < g.nx; ++k) {
            err = std::max(err, std::abs(lhs.coeffs[k] - alpha * mf.coeffs[k] - beta * mg.coeffs[k]));
            scale = std::max(scale, std::abs(lhs.coeffs[k]));
        }
        CHECK(err < 1e-12 * scale);
    }

    TEST_CASE("even fields have real transforms, odd fields imaginary ones")
    {
        const GridSpec g{20.0, 256, 1.0, 8};
        const auto E = forward_transform(Field::sample(g, [](double x) { return std::exp(-x * x) * std::cos(2 * x); }));
        const auto O = forward_transform(Field::sample(g, [](double x) { return x * std::exp(-x * x); }));
        double ei = 0.0;
        double orr = 0.0;
        for (std::size_t k = 0; k < g.nx; ++k) {
            ei = std::max(ei, std::abs(E.coeffs[k].imag()));
            orr = std::max(orr, std::abs(O.coeffs[k].real()));
        }
        CHECK(ei < 1e-12);
        CHECK(orr < 1e-12);
    }

    // Trivial cases.

    TEST_CASE("zero field has zero spectrum and zero norm")
    {
        const GridSpec g{10.0, 64, 1.0, 8};
        const auto F = forward_transform(Field(g));
        for (const auto& c : F.coeffs)
            CHECK(c == cplx{});
        CHECK(sobolev_norm(Field(g), 1.5) == 0.0);
    }

    TEST_CASE("grid exponential is a single spike of mass 2L")
    {
        const GridSpec g{10.0, 64, 1.0, 8};
        const std::size_t k0 = 5;
        const double xi0 = g.xi(k0);
        const auto F = forward_transform(Field::sample_complex(g, [&](double x) { return std::exp(cplx(0.0, xi0 * x)); }));
        for (std::size_t k = 0; k < g.nx; ++k)
            CHECK(std::abs(F.coeffs[k] - (k == k0 ? cplx(2.0 * g.L) : cplx{})) < 1e-10);
    }

    TEST_CASE("identity multiplier leaves the spectrum unchanged")
    {
        const GridSpec g{10.0, 64, 1.0, 8};
        const auto F = forward_transform(random_smooth_field(g, 4));
        const auto G = apply_multiplier(F, [](double) { return cplx(1.0); });
        CHECK(G.coeffs == F.coeffs);
    }

    TEST_CASE("non-finite multipliers are rejected")
    {
        const GridSpec g{10.0, 64, 1.0, 8};
        const auto F = forward_transform(random_smooth_field(g, 4));
        CHECK_THROWS_AS(apply_multiplier(F, [](double xi) { return cplx(1.0 / xi); }), NonFiniteMultiplier);
    }
}
