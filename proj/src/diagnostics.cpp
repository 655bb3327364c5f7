#include "hlb/diagnostics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlb {

void DiagnosticsReport::set(const std::string& name, double value)
{
    for (auto& [k, v] : scalars) {
        if (k == name) {
            v = value;
            return;
        }
    }
    scalars.emplace_back(name, value);
}

double DiagnosticsReport::get(const std::string& name) const
{
    for (const auto& [k, v] : scalars)
        if (k == name)
            return v;
    throw std::out_of_range("diagnostics: no scalar named " + name);
}

bool DiagnosticsReport::has(const std::string& name) const
{
    return std::any_of(scalars.begin(), scalars.end(), [&](const auto& p) { return p.first == name; });
}

void DiagnosticsReport::append(const std::string& series_name, double value)
{
    for (auto& [k, v] : series) {
        if (k == series_name) {
            v.push_back(value);
            return;
        }
    }
    series.emplace_back(series_name, std::vector<double>{value});
}

const std::vector<double>& DiagnosticsReport::get_series(const std::string& name) const
{
    for (const auto& [k, v] : series)
        if (k == name)
            return v;
    throw std::out_of_range("diagnostics: no series named " + name);
}

} // namespace hlb
