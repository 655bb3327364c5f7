#pragma once

#include <functional>
#include <vector>

#include "hlb/grid.hpp"

namespace hlb {

/// Samples of a function of x on the nodes of a GridSpec.
struct Field {
    GridSpec grid;
    std::vector<cplx> values;
    bool real = false;

    Field() = default;
    explicit Field(const GridSpec& g, bool is_real = true);
    Field(const GridSpec& g, std::vector<cplx> v, bool is_real);

    static Field sample(const GridSpec& g, const std::function<double(double)>& f);
    static Field sample_complex(const GridSpec& g, const std::function<cplx(double)>& f);

    /// Largest |value|.
    double max_abs() const;
    /// True when every imaginary part is below tol * max_abs().
    bool is_real(double tol = 1e-10) const;
    /// Throws ConfigError on size mismatch or non-finite entries.
    void validate() const;
};

/// Continuous-transform samples fhat(xi_k), FFT order (see GridSpec::xi).
struct Spectrum {
    GridSpec grid;
    std::vector<cplx> coeffs;

    double frequency(std::size_t k) const { return grid.xi(k); }
};

/// Discretized int exp(-i x xi) f(x) dx, scaled by dx.
Spectrum forward_transform(const Field& f);
/// Inverse with the dxi/(2 pi) weight. The result is flagged real when
/// `real_hint` is set and imaginary parts are negligible.
Field inverse_transform(const Spectrum& F, bool real_hint = false);

/// coeffs'[k] = m(xi_k) coeffs[k]. Throws NonFiniteMultiplier.
Spectrum apply_multiplier(const Spectrum& F, const std::function<cplx(double)>& m);
/// In-place variant on raw FFT-ordered coefficients.
void apply_multiplier_inplace(std::vector<cplx>& coeffs, const GridSpec& g,
    const std::function<cplx(double)>& m);

/// (dxi/2pi sum <xi_k>^{2s} |fhat_k|^2)^{1/2}
double sobolev_norm(const Field& f, double s);
double sobolev_norm(const Spectrum& F, double s);

/// Discrete L2 norm (dx sum |f_j|^2)^{1/2}.
double l2_norm_samples(const Field& f);

/// Spectral derivative of the given order; the Nyquist slot is zeroed for
/// odd orders so real fields stay real.
Field spectral_derivative(const Field& f, int order);

/// Band-limited interpolant (dxi/2pi) sum_k fhat_k exp(i x xi_k) at any x.
/// The Nyquist slot contributes symmetrically (cosine form).
cplx evaluate(const Spectrum& F, double x);

/// Max |f| over nodes with |x| >= L - width.
double tail_magnitude(const Field& f, double width);

} // namespace hlb
