#include "hlb/space_time.hpp"

#include <algorithm>
#include <cmath>

#include "hlb/cutoff.hpp"
#include "hlb/errors.hpp"

namespace hlb {

Field SpaceTimeField::slice(std::size_t n) const
{
    Field f(grid, false);
    std::copy(row(n), row(n) + grid.nx, f.values.begin());
    return f;
}

void SpaceTimeField::set_slice(std::size_t n, const Field& f)
{
    std::copy(f.values.begin(), f.values.end(), row(n));
}

double SpaceTimeField::max_abs() const
{
    double m = 0.0;
    for (const auto& v : values)
        m = std::max(m, std::abs(v));
    return m;
}

double SpaceTimeField::imag_residue() const
{
    const double scale = max_abs();
    if (scale == 0.0)
        return 0.0;
    double m = 0.0;
    for (const auto& v : values)
        m = std::max(m, std::abs(v.imag()));
    return m / scale;
}

void SpaceTimeField::validate() const
{
    if (values.size() != grid.nx * grid.nt)
        throw ConfigError("space-time field: dimensions do not match grid");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericalFailure("space-time field: non-finite entry");
}

SpaceTimeField& SpaceTimeField::operator+=(const SpaceTimeField& o)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] += o.values[i];
    return *this;
}

SpaceTimeField& SpaceTimeField::operator-=(const SpaceTimeField& o)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] -= o.values[i];
    return *this;
}

SpaceTimeField& SpaceTimeField::operator*=(double a)
{
    for (auto& v : values)
        v *= a;
    return *this;
}

SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b) { return a += b; }
SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b) { return a -= b; }
SpaceTimeField operator*(double a, SpaceTimeField b) { return b *= a; }

void apply_time_window(SpaceTimeField& u, double T)
{
    for (std::size_t n = 0; n < u.grid.nt; ++n) {
        const double w = eta(u.grid.t(n) / T);
        cplx* r = u.row(n);
        for (std::size_t j = 0; j < u.grid.nx; ++j)
            r[j] *= w;
    }
    u.window_T = T;
}

double max_abs_in(const SpaceTimeField& u, double x_lo, double x_hi, double t_lo, double t_hi)
{
    double m = 0.0;
    for (std::size_t n = 0; n < u.grid.nt; ++n) {
        const double t = u.grid.t(n);
        if (t < t_lo || t > t_hi)
            continue;
        for (std::size_t j = 0; j < u.grid.nx; ++j) {
            const double x = u.grid.x(j);
            if (x >= x_lo && x <= x_hi)
                m = std::max(m, std::abs(u.at(n, j)));
        }
    }
    return m;
}

} // namespace hlb
