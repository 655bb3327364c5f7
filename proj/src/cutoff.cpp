#include "hlb/cutoff.hpp"

#include <cmath>

namespace hlb {
namespace {
double mollifier_tail(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
} // namespace

double smooth_step(double u)
{
    if (u <= 0.0)
        return 0.0;
    if (u >= 1.0)
        return 1.0;
    const double a = mollifier_tail(u);
    return a / (a + mollifier_tail(1.0 - u));
}

double eta(double t) { return smooth_step(2.0 - std::abs(t)); }

double rho(double y) { return smooth_step(y + 1.0); }

} // namespace hlb
