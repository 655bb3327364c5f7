#include "hlb/profiles.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "hlb/cutoff.hpp"

namespace hlb {

std::function<double(double)> gaussian_profile(double amplitude, double center, double width)
{
    return [=](double x) {
        const double y = (x - center) / width;
        return amplitude * std::exp(-y * y);
    };
}

std::function<double(double)> bump_profile(double amplitude, double center, double radius)
{
    return [=](double x) {
        const double y = (x - center) / radius;
        if (std::abs(y) >= 1.0)
            return 0.0;
        return amplitude * std::exp(1.0 - 1.0 / (1.0 - y * y));
    };
}

std::function<double(double)> rough_profile(const GridSpec& grid, double amplitude, double decay,
    std::uint64_t seed)
{
    const std::size_t K = grid.nx / 2 - 1;
    const double dxi = grid.dxi();
    auto xi = std::make_shared<std::vector<double>>(K);
    auto coef = std::make_shared<std::vector<double>>(K);
    auto phase = std::make_shared<std::vector<double>>(K);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    for (std::size_t k = 1; k <= K; ++k) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(k)};
        std::mt19937_64 rng(seq);
        (*xi)[k - 1] = static_cast<double>(k) * dxi;
        (*coef)[k - 1] = amplitude * std::pow(bracket((*xi)[k - 1]), -decay) * std::sqrt(dxi);
        (*phase)[k - 1] = uniform(rng);
    }
    const double half_width = grid.L / 4.0;
    return [=](double x) {
        const double w = eta(x / half_width);
        if (w == 0.0)
            return 0.0;
        double acc = 0.0;
        for (std::size_t k = 0; k < xi->size(); ++k)
            acc += (*coef)[k] * std::cos((*xi)[k] * x + (*phase)[k]);
        return w * acc;
    };
}

} // namespace hlb
