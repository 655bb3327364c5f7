#include "hlb/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace hlb {

std::vector<double> simpson_weights(std::size_t n, double h)
{
    std::vector<double> w(n, 0.0);
    if (n < 2)
        return w;
    const std::size_t intervals = n - 1;
    if (intervals == 1) {
        w[0] = w[1] = 0.5 * h;
        return w;
    }
    const std::size_t simpson_end = (intervals % 2 == 0) ? intervals : intervals - 3;
    for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    if (simpson_end != intervals) {
        const std::size_t i = simpson_end;
        w[i] += 3.0 * h / 8.0;
        w[i + 1] += 9.0 * h / 8.0;
        w[i + 2] += 9.0 * h / 8.0;
        w[i + 3] += 3.0 * h / 8.0;
    }
    return w;
}

std::vector<double> gregory_weights(std::size_t n, double h)
{
    if (n < 6)
        return simpson_weights(n, h);
    std::vector<double> w(n, h);
    const double ends[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
    for (std::size_t i = 0; i < 3; ++i) {
        w[i] = ends[i] * h;
        w[n - 1 - i] = ends[i] * h;
    }
    return w;
}

QuadratureRule gauss_legendre_panels(double a, double b, std::size_t panels)
{
    using rule = boost::math::quadrature::gauss<double, 16>;
    const auto& abscissa = rule::abscissa();
    const auto& weight = rule::weights();
    QuadratureRule out;
    out.nodes.reserve(16 * panels);
    out.weights.reserve(16 * panels);
    const double width = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + (static_cast<double>(p) + 0.5) * width;
        const double half = 0.5 * width;
        for (std::size_t i = 0; i < abscissa.size(); ++i) {
            out.nodes.push_back(mid - half * abscissa[i]);
            out.weights.push_back(half * weight[i]);
            if (abscissa[i] != 0.0) {
                out.nodes.push_back(mid + half * abscissa[i]);
                out.weights.push_back(half * weight[i]);
            }
        }
    }
    return out;
}

} // namespace hlb
