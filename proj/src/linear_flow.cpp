#include "hlb/linear_flow.hpp"

#include <cmath>
#include <numbers>

#include "hlb/cutoff.hpp"
#include "hlb/errors.hpp"
#include "hlb/fft.hpp"

namespace hlb {
namespace {

// sin(t phi)/phi with its limit t at phi = 0.
double sinc_flow(double phi, double t) { return phi == 0.0 ? t : std::sin(t * phi) / phi; }

// Spectrum of W_R^t(f,g) given fhat and ghat, written into out.
void flow_spectrum(const Spectrum& F, const Spectrum& G, double t, std::vector<cplx>& out)
{
    const GridSpec& g = F.grid;
    out.resize(g.nx);
    for (std::size_t k = 0; k < g.nx; ++k) {
        const double xi = g.xi(k);
        const double phi = dispersion(xi);
        cplx v = std::cos(t * phi) * F.coeffs[k];
        if (k != g.nyquist_index())
            v += fused_velocity_multiplier(xi, t) * G.coeffs[k];
        out[k] = v;
    }
}

void check_same_grid(const Field& a, const Field& b)
{
    if (!(a.grid == b.grid))
        throw ConfigError("fields live on different grids");
}

} // namespace

double dispersion(double xi) { return std::sqrt(xi * xi + xi * xi * xi * xi); }

cplx fused_velocity_multiplier(double xi, double t)
{
    if (xi == 0.0)
        return 0.0;
    return cplx(0.0, xi * sinc_flow(dispersion(xi), t));
}

PropagatorState free_propagate_state(const PropagatorState& s, double t)
{
    check_same_grid(s.u, s.v);
    const Spectrum U = forward_transform(s.u);
    const Spectrum V = forward_transform(s.v);
    Spectrum U1 = U;
    Spectrum V1 = V;
    for (std::size_t k = 0; k < U.coeffs.size(); ++k) {
        const double phi = dispersion(U.grid.xi(k));
        const double c = std::cos(t * phi);
        const double sn = std::sin(t * phi);
        U1.coeffs[k] = c * U.coeffs[k] + sinc_flow(phi, t) * V.coeffs[k];
        V1.coeffs[k] = -phi * sn * U.coeffs[k] + c * V.coeffs[k];
    }
    const bool real = s.u.real && s.v.real;
    return {inverse_transform(U1, real), inverse_transform(V1, real)};
}

Field free_propagate(const Field& f, const Field& g, double t)
{
    check_same_grid(f, g);
    Spectrum out{f.grid, {}};
    flow_spectrum(forward_transform(f), forward_transform(g), t, out.coeffs);
    return inverse_transform(out, f.real && g.real);
}

SpaceTimeField free_flow_field(const Field& f, const Field& g, const GridSpec& grid)
{
    check_same_grid(f, g);
    const Spectrum F = forward_transform(f);
    const Spectrum G = forward_transform(g);
    SpaceTimeField out(grid);
    std::vector<cplx> row;
    for (std::size_t n = 0; n < grid.nt; ++n) {
        flow_spectrum(F, G, grid.t(n), row);
        Field slice = inverse_transform(Spectrum{f.grid, row}, false);
        out.set_slice(n, slice);
    }
    return out;
}

TracePair trace_at_zero(const Field& f, const Field& g, const GridSpec& times, double T)
{
    check_same_grid(f, g);
    const Spectrum F = forward_transform(f);
    const Spectrum G = forward_transform(g);
    const GridSpec& sg = f.grid;
    const double w = sg.dxi() / (2.0 * std::numbers::pi);
    TracePair out{BoundarySignal::zeros(times.dt(), times.nt),
        BoundarySignal::zeros(times.dt(), times.nt), T};
    std::vector<cplx> row;
    for (std::size_t n = 0; n < times.nt; ++n) {
        const double t = times.t(n);
        flow_spectrum(F, G, t, row);
        cplx v0 = 0.0;
        cplx v1 = 0.0;
        for (std::size_t k = 0; k < sg.nx; ++k) {
            v0 += row[k];
            if (k != sg.nyquist_index())
                v1 += cplx(0.0, sg.xi(k)) * row[k];
        }
        const double win = T > 0.0 ? eta(t / T) : 1.0;
        out.p1.values[n] = win * w * v0.real();
        out.p2.values[n] = win * w * v1.real();
    }
    return out;
}

double temporal_sobolev_norm(const std::vector<cplx>& samples, double dt, double s)
{
    const std::size_t n = samples.size();
    std::vector<cplx> h(samples);
    fft::forward(h.data(), n);
    const double dtau = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double tau = static_cast<double>(signed_index(k, n)) * dtau;
        acc += std::pow(1.0 + tau * tau, s) * std::norm(dt * h[k]);
    }
    return std::sqrt(acc * dtau / (2.0 * std::numbers::pi));
}

double kato_ratio(const Field& f, const Field& g, double s, const GridSpec& times)
{
    const double denom = sobolev_norm(f, s) + sobolev_norm(g, s - 1.0);
    if (denom < 1e-14)
        throw DegenerateData("kato_ratio: data norm vanishes");
    const TracePair tr = trace_at_zero(f, g, times, 0.0);
    std::vector<cplx> windowed(times.nt);
    for (std::size_t n = 0; n < times.nt; ++n)
        windowed[n] = eta(times.t(n)) * tr.p1.values[n];
    return temporal_sobolev_norm(windowed, times.dt(), (2.0 * s + 1.0) / 4.0) / denom;
}

std::vector<double> mode_energy(const PropagatorState& s)
{
    const Spectrum U = forward_transform(s.u);
    const Spectrum V = forward_transform(s.v);
    std::vector<double> e(U.coeffs.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
        const double phi = dispersion(U.grid.xi(k));
        e[k] = std::norm(V.coeffs[k]) + phi * phi * std::norm(U.coeffs[k]);
    }
    return e;
}

} // namespace hlb
