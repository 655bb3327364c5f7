#include "hlb/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hlb/errors.hpp"

namespace hlb {

void GridSpec::validate() const
{
    if (!(L > 0.0) || !std::isfinite(L))
        throw ConfigError("grid: L must be positive and finite");
    if (nx < 8 || (nx & (nx - 1)) != 0)
        throw ConfigError("grid: nx must be a power of two >= 8, got " + std::to_string(nx));
    if (nt < 8)
        throw ConfigError("grid: nt must be >= 8, got " + std::to_string(nt));
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw ConfigError("grid: t_max must be positive and finite");
    if (pad_factor < 1)
        throw ConfigError("grid: pad_factor must be >= 1");
    if (!std::isfinite(t_origin))
        throw ConfigError("grid: t_origin must be finite");
}

double GridSpec::dxi() const { return std::numbers::pi / L; }

double GridSpec::xi(std::size_t k) const
{
    return static_cast<double>(signed_index(k, nx)) * dxi();
}

} // namespace hlb
