#include "hlb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hlb/errors.hpp"
#include "hlb/fft.hpp"

namespace hlb {

Field::Field(const GridSpec& g, bool is_real) : grid(g), values(g.nx, cplx{}), real(is_real) {}

Field::Field(const GridSpec& g, std::vector<cplx> v, bool is_real)
    : grid(g), values(std::move(v)), real(is_real)
{
    validate();
}

Field Field::sample(const GridSpec& g, const std::function<double(double)>& f)
{
    Field out(g, true);
    for (std::size_t j = 0; j < g.nx; ++j)
        out.values[j] = f(g.x(j));
    return out;
}

Field Field::sample_complex(const GridSpec& g, const std::function<cplx(double)>& f)
{
    Field out(g, false);
    for (std::size_t j = 0; j < g.nx; ++j)
        out.values[j] = f(g.x(j));
    return out;
}

double Field::max_abs() const
{
    double m = 0.0;
    for (const auto& v : values)
        m = std::max(m, std::abs(v));
    return m;
}

bool Field::is_real(double tol) const
{
    const double bound = tol * max_abs();
    return std::all_of(values.begin(), values.end(),
        [bound](const cplx& v) { return std::abs(v.imag()) <= bound; });
}

void Field::validate() const
{
    if (values.size() != grid.nx)
        throw ConfigError("field: sample count does not match grid");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ConfigError("field: non-finite sample");
}

Spectrum forward_transform(const Field& f)
{
    const std::size_t n = f.grid.nx;
    Spectrum out{f.grid, f.values};
    fft::forward(out.coeffs.data(), n);
    // exp(-i x_j xi_k) = (-1)^k exp(-2 pi i jk/n) because x_0 = -L.
    const double dx = f.grid.dx();
    for (std::size_t k = 0; k < n; ++k)
        out.coeffs[k] *= (k % 2 == 0) ? dx : -dx;
    return out;
}

Field inverse_transform(const Spectrum& F, bool real_hint)
{
    const std::size_t n = F.grid.nx;
    const double scale = 1.0 / (2.0 * F.grid.L);
    std::vector<cplx> v(F.coeffs);
    for (std::size_t k = 0; k < n; ++k)
        v[k] *= (k % 2 == 0) ? scale : -scale;
    fft::backward(v.data(), n);
    Field out(F.grid, std::move(v), false);
    if (real_hint && out.is_real(1e-10)) {
        for (auto& x : out.values)
            x = x.real();
        out.real = true;
    }
    return out;
}

void apply_multiplier_inplace(std::vector<cplx>& coeffs, const GridSpec& g,
    const std::function<cplx(double)>& m)
{
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const cplx mk = m(g.xi(k));
        if (!std::isfinite(mk.real()) || !std::isfinite(mk.imag()))
            throw NonFiniteMultiplier("multiplier is not finite at xi = " + std::to_string(g.xi(k)));
        coeffs[k] *= mk;
    }
}

Spectrum apply_multiplier(const Spectrum& F, const std::function<cplx(double)>& m)
{
    Spectrum out = F;
    apply_multiplier_inplace(out.coeffs, F.grid, m);
    return out;
}

double sobolev_norm(const Spectrum& F, double s)
{
    double acc = 0.0;
    for (std::size_t k = 0; k < F.coeffs.size(); ++k) {
        const double w = std::pow(1.0 + F.grid.xi(k) * F.grid.xi(k), s);
        acc += w * std::norm(F.coeffs[k]);
    }
    return std::sqrt(acc * F.grid.dxi() / (2.0 * std::numbers::pi));
}

double sobolev_norm(const Field& f, double s) { return sobolev_norm(forward_transform(f), s); }

double l2_norm_samples(const Field& f)
{
    double acc = 0.0;
    for (const auto& v : f.values)
        acc += std::norm(v);
    return std::sqrt(acc * f.grid.dx());
}

Field spectral_derivative(const Field& f, int order)
{
    Spectrum F = forward_transform(f);
    const bool odd = order % 2 != 0;
    for (std::size_t k = 0; k < F.coeffs.size(); ++k) {
        if (odd && k == f.grid.nyquist_index()) {
            F.coeffs[k] = 0.0;
            continue;
        }
        F.coeffs[k] *= std::pow(cplx(0.0, f.grid.xi(k)), order);
    }
    return inverse_transform(F, f.real);
}

cplx evaluate(const Spectrum& F, double x)
{
    cplx acc = 0.0;
    const std::size_t ny = F.grid.nyquist_index();
    for (std::size_t k = 0; k < F.coeffs.size(); ++k) {
        const double xi = F.grid.xi(k);
        if (k == ny)
            acc += F.coeffs[k] * std::cos(x * xi);
        else
            acc += F.coeffs[k] * std::polar(1.0, x * xi);
    }
    return acc * F.grid.dxi() / (2.0 * std::numbers::pi);
}

double tail_magnitude(const Field& f, double width)
{
    double m = 0.0;
    for (std::size_t j = 0; j < f.grid.nx; ++j)
        if (std::abs(f.grid.x(j)) >= f.grid.L - width)
            m = std::max(m, std::abs(f.values[j]));
    return m;
}

} // namespace hlb
