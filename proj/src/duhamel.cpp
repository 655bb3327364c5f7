#include "hlb/duhamel.hpp"

#include <cmath>
#include <numbers>

#include "hlb/cutoff.hpp"
#include "hlb/errors.hpp"
#include "hlb/fft.hpp"
#include "hlb/quadrature.hpp"

namespace hlb {
namespace {

double window(double t, double T) { return T > 0.0 ? eta(t / T) : 1.0; }

// Continuous-transform spectra of every row (fhat_k = dx (-1)^k FFT_k).
std::vector<cplx> row_spectra(const SpaceTimeField& u)
{
    const GridSpec& g = u.grid;
    std::vector<cplx> S(u.values);
    fft::forward_many(S.data(), g.nx, g.nt);
    const double dx = g.dx();
    for (std::size_t n = 0; n < g.nt; ++n)
        for (std::size_t k = 0; k < g.nx; ++k)
            S[n * g.nx + k] *= (k % 2 == 0) ? dx : -dx;
    return S;
}

SpaceTimeField rows_from_spectra(std::vector<cplx> S, const GridSpec& g, double T)
{
    const double scale = 1.0 / (2.0 * g.L);
    for (std::size_t n = 0; n < g.nt; ++n)
        for (std::size_t k = 0; k < g.nx; ++k)
            S[n * g.nx + k] *= (k % 2 == 0) ? scale : -scale;
    fft::backward_many(S.data(), g.nx, g.nt);
    SpaceTimeField out(g, T);
    out.values = std::move(S);
    if (T > 0.0)
        for (std::size_t n = 0; n < g.nt; ++n) {
            const double w = eta(g.t(n) / T);
            for (std::size_t j = 0; j < g.nx; ++j)
                out.at(n, j) *= w;
        }
    return out;
}

TracePair traces_from_spectra(const std::vector<cplx>& S, const GridSpec& g, double T)
{
    TracePair tp{BoundarySignal::zeros(g.dt(), g.nt), BoundarySignal::zeros(g.dt(), g.nt), T};
    const double w = g.dxi() / (2.0 * std::numbers::pi);
    for (std::size_t n = 0; n < g.nt; ++n) {
        cplx v0 = 0.0;
        cplx v1 = 0.0;
        for (std::size_t k = 0; k < g.nx; ++k) {
            const cplx c = S[n * g.nx + k];
            v0 += c;
            if (k != g.nyquist_index())
                v1 += cplx(0.0, g.xi(k)) * c;
        }
        const double win = window(g.t(n), T);
        tp.p1.values[n] = win * w * v0.real();
        tp.p2.values[n] = win * w * v1.real();
    }
    return tp;
}

} // namespace

double m_fused_multiplier(double xi) { return xi == 0.0 ? 0.0 : std::abs(xi) / std::sqrt(1.0 + xi * xi); }

SpaceTimeField nonlinearity(const SpaceTimeField& u, double T)
{
    const GridSpec& g = u.grid;
    const std::size_t n = g.nx;
    const std::size_t m = n * static_cast<std::size_t>(std::max(1, g.pad_factor));
    const long half = static_cast<long>(n / 2);
    const double cut = (2.0 / 3.0) * (static_cast<double>(half) * g.dxi());
    SpaceTimeField out(g, T);
    std::vector<cplx> a(n), fine(m);
    for (std::size_t t = 0; t < g.nt; ++t) {
        std::copy(u.row(t), u.row(t) + n, a.begin());
        fft::forward(a.data(), n);
        std::fill(fine.begin(), fine.end(), cplx{});
        for (std::size_t k = 0; k < n; ++k) {
            const long sk = signed_index(k, n);
            const cplx c = a[k] / static_cast<double>(n);
            if (sk == -half && m > n) {
                // Split the Nyquist mode evenly between +-n/2.
                fine[m - n / 2] += 0.5 * c;
                fine[n / 2] += 0.5 * c;
            } else {
                fine[sk >= 0 ? static_cast<std::size_t>(sk) : m - static_cast<std::size_t>(-sk)] += c;
            }
        }
        fft::backward(fine.data(), m);
        for (auto& v : fine)
            v = v * v;
        fft::forward(fine.data(), m);
        const double w = window(g.t(t), T);
        for (std::size_t k = 0; k < n; ++k) {
            const long sk = signed_index(k, n);
            const double xi = static_cast<double>(sk) * g.dxi();
            const std::size_t src = sk >= 0 ? static_cast<std::size_t>(sk) : m - static_cast<std::size_t>(-sk);
            a[k] = std::abs(xi) > cut ? cplx{} : -xi * xi * w * fine[src] / static_cast<double>(m);
        }
        fft::backward(a.data(), n);
        std::copy(a.begin(), a.end(), out.row(t));
    }
    return out;
}

std::vector<cplx> duhamel_spectra(const SpaceTimeField& G)
{
    const GridSpec& g = G.grid;
    if (g.t_origin != 0.0)
        throw ConfigError("duhamel: the time grid must start at t = 0");
    const std::size_t nt = g.nt;
    const std::size_t nx = g.nx;
    const double h = g.dt();
    const std::vector<cplx> S = row_spectra(G);
    std::vector<cplx> out(nt * nx, cplx{});

    // Simpson base pattern 1, 4, 2, 4, ... (times h/3) for nodes below the
    // current one; the closing 3/8 panel for odd n is added explicitly.
    std::vector<double> base(nt);
    for (std::size_t m = 0; m < nt; ++m)
        base[m] = (m == 0 ? 1.0 : (m % 2 == 1 ? 4.0 : 2.0)) * h / 3.0;
    const double c38[3] = {3.0 * h / 8.0, 9.0 * h / 8.0, 9.0 * h / 8.0};

    std::vector<cplx> ep(nt), em(nt), prefix_p(nt + 1), prefix_q(nt + 1);
    std::vector<cplx> col(nt);
    for (std::size_t k = 0; k < nx; ++k) {
        const double phi = dispersion(g.xi(k));
        for (std::size_t n = 0; n < nt; ++n)
            col[n] = S[n * nx + k];
        if (phi == 0.0) {
            // Kernel sin(t phi)/phi -> t: direct sum, one column only.
            for (std::size_t n = 1; n < nt; ++n) {
                const auto w = simpson_weights(n + 1, h);
                cplx acc = 0.0;
                for (std::size_t m = 0; m < n; ++m)
                    acc += w[m] * static_cast<double>(n - m) * h * col[m];
                out[n * nx + k] = acc;
            }
            continue;
        }
        prefix_p[0] = prefix_q[0] = 0.0;
        for (std::size_t m = 0; m < nt; ++m) {
            ep[m] = std::polar(1.0, -static_cast<double>(m) * h * phi);
            em[m] = std::conj(ep[m]);
            prefix_p[m + 1] = prefix_p[m] + base[m] * ep[m] * col[m];
            prefix_q[m + 1] = prefix_q[m] + base[m] * em[m] * col[m];
        }
        for (std::size_t n = 1; n < nt; ++n) {
            cplx P;
            cplx Q;
            if (n == 1) {
                P = 0.5 * h * ep[0] * col[0];
                Q = 0.5 * h * em[0] * col[0];
            } else if (n % 2 == 0) {
                P = prefix_p[n];
                Q = prefix_q[n];
            } else {
                const std::size_t s = n - 3;
                P = prefix_p[s] + (h / 3.0 + c38[0]) * ep[s] * col[s];
                Q = prefix_q[s] + (h / 3.0 + c38[0]) * em[s] * col[s];
                if (s == 0) {
                    // No Simpson part: only the 3/8 panel weight at node 0.
                    P = c38[0] * ep[0] * col[0];
                    Q = c38[0] * em[0] * col[0];
                }
                for (std::size_t i = 1; i < 3; ++i) {
                    P += c38[i] * ep[s + i] * col[s + i];
                    Q += c38[i] * em[s + i] * col[s + i];
                }
            }
            // The m = n term carries sin(0) = 0 and is omitted.
            const double tn = static_cast<double>(n) * h * phi;
            out[n * nx + k] = (std::polar(1.0, tn) * P - std::polar(1.0, -tn) * Q) / cplx(0.0, 2.0 * phi);
        }
    }
    return out;
}

SpaceTimeField duhamel_integral(const SpaceTimeField& G)
{
    return rows_from_spectra(duhamel_spectra(G), G.grid, G.window_T);
}

TracePair duhamel_traces(const SpaceTimeField& G, double T)
{
    return traces_from_spectra(duhamel_spectra(G), G.grid, T);
}

DuhamelParts duhamel_with_traces(const SpaceTimeField& G, double T)
{
    auto S = duhamel_spectra(G);
    TracePair tp = traces_from_spectra(S, G.grid, T);
    return {rows_from_spectra(std::move(S), G.grid, T), std::move(tp)};
}

} // namespace hlb
