#pragma once

#include <vector>

#include "hlb/spectral.hpp"

namespace hlb {

/// u(x_j, t_n) stored row-major: values[n * nx + j].
struct SpaceTimeField {
    GridSpec grid;
    std::vector<cplx> values;
    /// Time window scale T of the eta(t/T) cutoff; 0 means unwindowed.
    double window_T = 0.0;

    SpaceTimeField() = default;
    explicit SpaceTimeField(const GridSpec& g, double T = 0.0)
        : grid(g), values(g.nx * g.nt, cplx{}), window_T(T)
    {
    }

    cplx& at(std::size_t n, std::size_t j) { return values[n * grid.nx + j]; }
    const cplx& at(std::size_t n, std::size_t j) const { return values[n * grid.nx + j]; }
    cplx* row(std::size_t n) { return values.data() + n * grid.nx; }
    const cplx* row(std::size_t n) const { return values.data() + n * grid.nx; }

    Field slice(std::size_t n) const;
    void set_slice(std::size_t n, const Field& f);

    double max_abs() const;
    /// Largest |imag| relative to max_abs().
    double imag_residue() const;
    void validate() const;

    SpaceTimeField& operator+=(const SpaceTimeField& o);
    SpaceTimeField& operator-=(const SpaceTimeField& o);
    SpaceTimeField& operator*=(double a);
};

SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b);
SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b);
SpaceTimeField operator*(double a, SpaceTimeField b);

/// Multiply every time row by eta(t_n / T).
void apply_time_window(SpaceTimeField& u, double T);

/// Max |u| over nodes with x in [x_lo, x_hi] and t in [t_lo, t_hi].
double max_abs_in(const SpaceTimeField& u, double x_lo, double x_hi, double t_lo, double t_hi);

} // namespace hlb
