#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hlb {

/// Named scalars and series in insertion order.
struct DiagnosticsReport {
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<std::pair<std::string, std::vector<double>>> series;

    void set(const std::string& name, double value);
    /// Throws std::out_of_range for unknown names.
    double get(const std::string& name) const;
    bool has(const std::string& name) const;
    void append(const std::string& series_name, double value);
    const std::vector<double>& get_series(const std::string& name) const;
};

} // namespace hlb
