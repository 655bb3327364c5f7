#include "hlb/boundary.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hlb/cutoff.hpp"
#include "hlb/errors.hpp"
#include "hlb/quadrature.hpp"

namespace hlb {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::size_t gl_order = 16;

double curve_z(double omega) { return omega * std::sqrt(omega * omega + 1.0); }

// Inverse of z(omega) = omega sqrt(omega^2 + 1) for z >= 0.
double curve_omega(double z) { return std::sqrt(0.5 * (std::sqrt(1.0 + 4.0 * z * z) - 1.0)); }

std::vector<cplx> laplace_at(const BoundarySignal& h, const std::vector<cplx>& lambdas)
{
    const auto w = gregory_weights(h.size(), h.dt);
    std::vector<cplx> out(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        cplx acc = 0.0;
        for (std::size_t n = 0; n < h.size(); ++n)
            if (h.values[n] != 0.0)
                acc += w[n] * h.values[n] * std::exp(-lambdas[i] * h.t(n));
        out[i] = acc;
    }
    return out;
}

double signal_scale(const BoundarySignal& h1, const BoundarySignal& h2)
{
    return h1.max_abs() + h2.max_abs();
}

// Quadrature nodes in omega with the data-dependent coefficients of the
// decaying (alpha) and oscillatory (beta) integrands:
//   -A - B = alpha e^{-x r} rho(x r),  C + D = beta e^{-i x omega}.
struct KernelNodes {
    std::vector<double> omega, weight, r, z;
    std::vector<cplx> alpha, beta;
};

KernelNodes build_nodes(const BoundarySignal& h1, const BoundarySignal& h2, const KernelResolution& res)
{
    const auto rule = gauss_legendre_panels(-res.omega_cutoff, res.omega_cutoff,
        std::max<std::size_t>(1, res.n_quad / gl_order));
    KernelNodes k;
    k.omega = rule.nodes;
    k.weight = rule.weights;
    const std::size_t m = k.omega.size();
    k.r.resize(m);
    k.z.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        k.r[i] = std::sqrt(k.omega[i] * k.omega[i] + 1.0);
        k.z[i] = k.omega[i] * k.r[i];
    }
    const auto H1 = hat_at(h1, k.z);
    const auto H2 = hat_at(h2, k.z);
    k.alpha.resize(m);
    k.beta.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const cplx io(0.0, k.omega[i]);
        const cplx c = io + k.r[i];
        k.alpha[i] = -(c / k.r[i]) * (io * H1[i] + H2[i]);
        k.beta[i] = c * (H1[i] + H2[i] / k.r[i]);
    }
    return k;
}

Eigen::MatrixXcd evaluate(const KernelNodes& k, const std::vector<double>& xs,
    const std::vector<double>& ts, int t_order, int x_order, BoundaryTerms terms,
    const std::function<double(double)>& rho_fn)
{
    const Eigen::Index m = static_cast<Eigen::Index>(k.omega.size());
    const Eigen::Index nx = static_cast<Eigen::Index>(xs.size());
    const Eigen::Index nt = static_cast<Eigen::Index>(ts.size());
    const bool use_a = terms != BoundaryTerms::oscillatory;
    const bool use_c = terms != BoundaryTerms::decaying;

    Eigen::MatrixXcd T(nt, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const cplx dz = std::pow(cplx(0.0, k.z[i]), t_order);
        for (Eigen::Index n = 0; n < nt; ++n)
            T(n, i) = k.weight[i] * dz * std::polar(1.0, ts[n] * k.z[i]);
    }
    Eigen::MatrixXcd F(m, nx);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double r = k.r[i];
        const double om = k.omega[i];
        for (Eigen::Index j = 0; j < nx; ++j) {
            const double x = xs[j];
            cplx v = 0.0;
            if (use_a && x * r > -1.0) {
                const double decay = std::exp(-x * r) * rho_fn(x * r);
                v += k.alpha[i] * decay * std::pow(-r, x_order);
            }
            if (use_c)
                v += k.beta[i] * std::polar(1.0, -x * om) * std::pow(cplx(0.0, -om), x_order);
            F(i, j) = v;
        }
    }
    Eigen::MatrixXcd V = T * F;
    V /= two_pi;
    return V;
}

std::function<double(double)> rho_or_default(const BoundaryKernelConfig& cfg)
{
    return cfg.rho ? cfg.rho : std::function<double(double)>(rho);
}

std::vector<double> grid_x(const GridSpec& g)
{
    std::vector<double> xs(g.nx);
    for (std::size_t j = 0; j < g.nx; ++j)
        xs[j] = g.x(j);
    return xs;
}

std::vector<double> grid_t(const GridSpec& g)
{
    std::vector<double> ts(g.nt);
    for (std::size_t n = 0; n < g.nt; ++n)
        ts[n] = g.t(n);
    return ts;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

std::vector<cplx> hat_at(const BoundarySignal& h, const std::vector<double>& z)
{
    const auto w = gregory_weights(h.size(), h.dt);
    std::vector<cplx> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        cplx acc = 0.0;
        for (std::size_t n = 0; n < h.size(); ++n)
            if (h.values[n] != 0.0)
                acc += w[n] * h.values[n] * std::polar(1.0, -z[i] * h.t(n));
        out[i] = acc;
    }
    return out;
}

std::vector<cplx> hat_on_curve(const BoundarySignal& h, const std::vector<double>& omegas)
{
    std::vector<double> z(omegas.size());
    std::transform(omegas.begin(), omegas.end(), z.begin(), curve_z);
    return hat_at(h, z);
}

cplx hat_on_curve(const BoundarySignal& h, double omega) { return hat_on_curve(h, std::vector<double>{omega})[0]; }

namespace {

// sqrt with arg taken in (-pi/2, 3pi/2]: branch cut along the negative
// imaginary axis.
cplx sqrt_cut_below(cplx w)
{
    double a = std::arg(w);
    if (a <= -0.5 * std::numbers::pi)
        a += two_pi;
    return std::polar(std::sqrt(std::abs(w)), 0.5 * a);
}

// sqrt with arg taken in (-3pi/2, pi/2]: branch cut along the positive
// imaginary axis.
cplx sqrt_cut_above(cplx w)
{
    double a = std::arg(w);
    if (a > 0.5 * std::numbers::pi)
        a -= two_pi;
    return std::polar(std::sqrt(std::abs(w)), 0.5 * a);
}

// sqrt(1/4 - lambda^2) with the branch fixed by the arguments of
// lambda + 1/2 and lambda - 1/2.
cplx s_root(cplx lambda)
{
    const double th1 = std::arg(lambda + 0.5);
    const double th2 = std::arg(lambda - 0.5);
    return std::polar(std::sqrt(std::abs(0.25 - lambda * lambda)), 0.5 * (th1 + th2 + std::numbers::pi));
}

} // namespace

cplx MellinKernel::root_a(cplx lambda) { return -sqrt_cut_below(0.5 + s_root(lambda)); }

cplx MellinKernel::root_b(cplx lambda) { return -sqrt_cut_above(0.5 - s_root(lambda)); }

KernelResolution choose_resolution(const BoundarySignal& h1, const BoundarySignal& h2,
    double x_extent, double t_extent, double dt, const BoundaryKernelConfig& cfg)
{
    KernelResolution res;
    const double cap = std::min(cfg.omega_max, curve_omega(0.9 * std::numbers::pi / dt));
    if (cfg.omega_cutoff > 0.0) {
        res.omega_cutoff = cfg.omega_cutoff;
    } else {
        const double step = 0.1;
        std::vector<double> omegas;
        for (double w = -cap; w <= cap; w += step)
            omegas.push_back(w);
        const auto H1 = hat_on_curve(h1, omegas);
        const auto H2 = hat_on_curve(h2, omegas);
        std::vector<double> weight(omegas.size());
        double peak = 0.0;
        for (std::size_t i = 0; i < omegas.size(); ++i) {
            weight[i] = (1.0 + std::abs(omegas[i])) * std::abs(H1[i]) + std::abs(H2[i]);
            peak = std::max(peak, weight[i]);
        }
        double last = 0.0;
        for (std::size_t i = 0; i < omegas.size(); ++i)
            if (weight[i] > cfg.tail_tol * peak)
                last = std::max(last, std::abs(omegas[i]));
        res.omega_cutoff = peak == 0.0 ? 1.0 : std::min(cap, last + 0.5);
    }
    if (cfg.n_quad > 0) {
        res.n_quad = std::max<std::size_t>(gl_order, cfg.n_quad / gl_order * gl_order);
    } else {
        const double W = res.omega_cutoff;
        // Largest phase rate of exp(i(t z - x omega)) on [-W, W].
        const double rate = x_extent + t_extent * (2.0 * W * W + 1.0) / std::sqrt(W * W + 1.0);
        const auto panels = static_cast<std::size_t>(std::ceil(2.0 * W * rate / 30.0));
        res.n_quad = gl_order * std::max<std::size_t>(panels, 16);
    }
    return res;
}

std::vector<std::vector<cplx>> boundary_values(const BoundarySignal& h1, const BoundarySignal& h2,
    const std::vector<double>& xs, const std::vector<double>& ts, const KernelResolution& res,
    const BoundaryKernelConfig& cfg, int t_order, int x_order, BoundaryTerms terms)
{
    if (x_order > 0 && std::any_of(xs.begin(), xs.end(), [](double x) { return x < 0.0; }))
        throw ConfigError("boundary_values: x derivatives need x >= 0");
    if (x_order < 0 || x_order > 4 || t_order < 0)
        throw ConfigError("boundary_values: unsupported derivative order");
    const auto nodes = build_nodes(h1, h2, res);
    const Eigen::MatrixXcd V = evaluate(nodes, xs, ts, t_order, x_order, terms, rho_or_default(cfg));
    std::vector<std::vector<cplx>> out(ts.size(), std::vector<cplx>(xs.size()));
    for (std::size_t n = 0; n < ts.size(); ++n)
        for (std::size_t j = 0; j < xs.size(); ++j)
            out[n][j] = V(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j));
    return out;
}

SpaceTimeField boundary_evolution(const BoundarySignal& h1, const BoundarySignal& h2,
    const GridSpec& grid, const BoundaryKernelConfig& cfg, BoundaryTerms terms, KernelResolution* used)
{
    grid.validate();
    SpaceTimeField out(grid);
    if (signal_scale(h1, h2) == 0.0)
        return out;
    const double t_extent = std::max(std::abs(grid.t(0)), std::abs(grid.t(grid.nt - 1)));
    KernelResolution res = choose_resolution(h1, h2, grid.L, t_extent, h1.dt, cfg);
    const auto xs = grid_x(grid);
    const auto ts = grid_t(grid);
    const auto rho_fn = rho_or_default(cfg);

    Eigen::MatrixXcd V = evaluate(build_nodes(h1, h2, res), xs, ts, 0, 0, terms, rho_fn);
    if (cfg.check_convergence) {
        KernelResolution fine = res;
        fine.n_quad *= 2;
        Eigen::MatrixXcd V2 = evaluate(build_nodes(h1, h2, fine), xs, ts, 0, 0, terms, rho_fn);
        const double scale = max_abs(V2);
        const double change = max_abs(V2 - V);
        if (scale > 0.0 && change > cfg.convergence_tol * scale)
            throw QuadratureNotConverged("boundary kernel: doubling nodes changed the field by "
                + std::to_string(change / scale) + " (relative)");
        V = std::move(V2);
        res = fine;
    }
    if (used)
        *used = res;
    for (std::size_t n = 0; n < grid.nt; ++n)
        for (std::size_t j = 0; j < grid.nx; ++j)
            out.at(n, j) = V(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j));
    return out;
}

SpaceTimeField cd_multiplier_flow(const BoundarySignal& h1, const BoundarySignal& h2, const GridSpec& grid)
{
    grid.validate();
    const std::size_t nx = grid.nx;
    std::vector<double> z(nx), r(nx);
    for (std::size_t k = 0; k < nx; ++k) {
        r[k] = std::sqrt(grid.xi(k) * grid.xi(k) + 1.0);
        z[k] = grid.xi(k) * r[k];
    }
    const auto H1 = hat_at(h1, z);
    const auto H2 = hat_at(h2, z);
    std::vector<cplx> phi(nx);
    for (std::size_t k = 0; k < nx; ++k) {
        const cplx c(r[k], grid.xi(k));
        phi[k] = c * (H1[k] + H2[k] / r[k]);
    }
    SpaceTimeField out(grid);
    Spectrum S{grid, std::vector<cplx>(nx)};
    for (std::size_t n = 0; n < grid.nt; ++n) {
        const double t = grid.t(n);
        // exp(-i x omega) is exp(i x xi) at xi = -omega: reflect the slots.
        for (std::size_t k = 0; k < nx; ++k) {
            const std::size_t src = (nx - k) % nx;
            S.coeffs[k] = std::polar(1.0, t * z[src]) * phi[src];
        }
        out.set_slice(n, inverse_transform(S));
    }
    return out;
}

double mellin_oracle(const BoundarySignal& h1, const BoundarySignal& h2, double x, double t,
    const MellinConfig& cfg)
{
    if (!(x > 0.0) || !(t > 0.0))
        throw ConfigError("mellin_oracle: requires x > 0 and t > 0");
    const double scale = signal_scale(h1, h2);
    if (scale == 0.0)
        return 0.0;
    BoundaryKernelConfig kc;
    kc.omega_cutoff = cfg.mu_cutoff;
    kc.n_quad = cfg.n_quad;
    const KernelResolution res = choose_resolution(h1, h2, x, t, h1.dt, kc);

    auto integrate = [&](std::size_t n_quad) {
        const auto rule = gauss_legendre_panels(-res.omega_cutoff, res.omega_cutoff, n_quad / gl_order);
        std::vector<cplx> lambdas(rule.nodes.size());
        std::vector<double> dy(rule.nodes.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double mu = rule.nodes[i];
            const double rr = std::sqrt(mu * mu + 1.0);
            lambdas[i] = cplx(0.0, mu * rr);
            dy[i] = (2.0 * mu * mu + 1.0) / rr;
        }
        const auto L1 = laplace_at(h1, lambdas);
        const auto L2 = laplace_at(h2, lambdas);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            const cplx a = MellinKernel::root_a(lambdas[i]);
            const cplx b = MellinKernel::root_b(lambdas[i]);
            const cplx u = ((a * L1[i] - L2[i]) * std::exp(b * x) - (b * L1[i] - L2[i]) * std::exp(a * x)) / (a - b);
            // d lambda = i dy, and the 1/(2 pi i) prefactor absorbs the i.
            acc += rule.weights[i] * dy[i] * std::exp(lambdas[i] * t) * u;
        }
        return acc.real() / two_pi;
    };
    const double coarse = integrate(res.n_quad);
    const double fine = integrate(2 * res.n_quad);
    if (std::abs(fine - coarse) > cfg.convergence_tol * scale)
        throw ContourQuadratureNotConverged("mellin oracle: doubling nodes changed the value by "
            + std::to_string(std::abs(fine - coarse)));
    return fine;
}

DiagnosticsReport verify_linear_ibvp(const BoundarySignal& h1, const BoundarySignal& h2,
    const GridSpec& grid, const BoundaryKernelConfig& cfg)
{
    DiagnosticsReport rep;
    KernelResolution res;
    const SpaceTimeField v = boundary_evolution(h1, h2, grid, cfg, BoundaryTerms::all, &res);
    rep.set("omega_cutoff", res.omega_cutoff);
    rep.set("n_quad", static_cast<double>(res.n_quad));

    // v_tt by central differences; x derivatives exactly, inside the omega
    // integrals, where rho = 1.
    const double dt = grid.dt();
    std::vector<double> xr;
    std::vector<std::size_t> jr;
    for (std::size_t j = 0; j < grid.nx; ++j) {
        const double x = grid.x(j);
        if (x >= grid.dx() - 1e-12 && x <= 0.5 * grid.L + 1e-12) {
            xr.push_back(x);
            jr.push_back(j);
        }
    }
    std::vector<double> tr;
    std::vector<std::size_t> nr;
    for (std::size_t n = 1; n + 1 < grid.nt; ++n) {
        const double t = grid.t(n);
        if (t >= grid.t(0) + dt - 1e-12 && t <= grid.t(0) + 0.5 * grid.t_max + 1e-12) {
            tr.push_back(t);
            nr.push_back(n);
        }
    }
    double residual = 0.0;
    double vtt_scale = 0.0;
    if (signal_scale(h1, h2) != 0.0 && !xr.empty() && !tr.empty()) {
        const auto vxx = boundary_values(h1, h2, xr, tr, res, cfg, 0, 2);
        const auto vxxxx = boundary_values(h1, h2, xr, tr, res, cfg, 0, 4);
        for (std::size_t a = 0; a < nr.size(); ++a) {
            const std::size_t n = nr[a];
            for (std::size_t b = 0; b < jr.size(); ++b) {
                const std::size_t j = jr[b];
                const cplx vtt = (v.at(n + 1, j) - 2.0 * v.at(n, j) + v.at(n - 1, j)) / (dt * dt);
                residual = std::max(residual, std::abs(vtt - vxx[a][b] + vxxxx[a][b]));
                vtt_scale = std::max(vtt_scale, std::abs(vtt));
            }
        }
    }
    rep.set("pde_residual", residual);
    rep.set("pde_vtt_scale", vtt_scale);

    std::vector<double> ts(grid.nt);
    for (std::size_t n = 0; n < grid.nt; ++n)
        ts[n] = grid.t(n);
    const auto vx0 = signal_scale(h1, h2) == 0.0
        ? std::vector<std::vector<cplx>>(grid.nt, std::vector<cplx>(1))
        : boundary_values(h1, h2, {0.0}, ts, res, cfg, 0, 1);
    double e1 = 0.0;
    double e2 = 0.0;
    for (std::size_t n = 0; n < grid.nt; ++n) {
        e1 = std::max(e1, std::abs(v.at(n, grid.zero_index()) - h1.at(ts[n])));
        e2 = std::max(e2, std::abs(vx0[n][0] - h2.at(ts[n])));
    }
    rep.set("trace_error_h1", e1);
    rep.set("trace_error_h2", e2);

    std::vector<double> xs;
    for (std::size_t j = grid.zero_index() + 1; j < grid.nx; ++j)
        xs.push_back(grid.x(j));
    double i0 = 0.0;
    double i1 = 0.0;
    if (signal_scale(h1, h2) != 0.0) {
        const auto u0 = boundary_values(h1, h2, xs, {0.0}, res, cfg, 0, 0);
        const auto ut0 = boundary_values(h1, h2, xs, {0.0}, res, cfg, 1, 0);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            i0 = std::max(i0, std::abs(u0[0][j]));
            i1 = std::max(i1, std::abs(ut0[0][j]));
        }
    }
    rep.set("initial_u_error", i0);
    rep.set("initial_ut_error", i1);
    rep.set("imag_residue", v.imag_residue());
    return rep;
}

} // namespace hlb
