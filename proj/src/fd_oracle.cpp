#include "hlb/fd_oracle.hpp"

#include <cmath>

#include "hlb/errors.hpp"

namespace hlb {

void FDGrid::validate() const
{
    if (M_x < 16 || !(X_max > 0.0) || !(dt > 0.0))
        throw ConfigError("FDGrid: need M_x >= 16 and positive X_max, dt");
    if (damping_width < 10 || damping_width >= M_x / 2)
        throw ConfigError("FDGrid: damping_width must be at least 10 nodes and below M_x/2");
    if (dt > kStabilityConstant * dx() * dx() * (1.0 + 1e-12))
        throw ConfigError("FDGrid: dt exceeds the leapfrog stability bound");
}

FDGrid fd_grid_for(const GridSpec& out, double X_max, std::size_t refine, double courant,
    std::size_t damping_width)
{
    FDGrid g;
    const double dx = out.dx() / static_cast<double>(refine);
    g.M_x = static_cast<std::size_t>(std::llround(X_max / dx)) + 1;
    g.X_max = dx * static_cast<double>(g.M_x - 1);
    const double steps = std::ceil(out.dt() / (courant * dx * dx));
    g.dt = out.dt() / steps;
    g.damping_width = damping_width;
    return g;
}

namespace {

// Leapfrog state with one ghost node on the left and two zero nodes on the
// right: storage index p = i + 1 for node i in [-1, M_x + 1].
class Stepper {
public:
    Stepper(const FDProblem& pr, const FDGrid& g)
        : pr_(pr), g_(g), dx_(g.dx()), M_(g.M_x), sigma_(g.M_x, 0.0),
          um_(M_ + 3, 0.0), u_(M_ + 3, 0.0), up_(M_ + 3, 0.0), w_(M_ + 3, 0.0)
    {
        const std::size_t start = M_ - 1 - g.damping_width;
        for (std::size_t i = start; i < M_; ++i) {
            const double r = static_cast<double>(i - start) / static_cast<double>(g.damping_width);
            sigma_[i] = g.damping_strength * r * r;
        }
        for (std::size_t i = 0; i < M_; ++i)
            u_[i + 1] = pr_.f(x(i));
        close_left(u_, 0.0);
        // Second-order Taylor start.
        apply_operator(u_, 0.0);
        for (std::size_t i = 1; i < M_; ++i) {
            const double v0 = pr_.u_t0(x(i));
            up_[i + 1] = u_[i + 1] + g_.dt * v0 + 0.5 * g_.dt * g_.dt * (lu_[i] - sigma_[i] * v0);
        }
        close_left(up_, g_.dt);
        v_ = std::vector<double>(M_, 0.0);
        for (std::size_t i = 0; i < M_; ++i)
            v_[i] = pr_.u_t0(x(i));
        um_.swap(u_);
        u_.swap(up_);
        step_ = 1;
    }

    double x(std::size_t i) const { return static_cast<double>(i) * dx_; }
    double t() const { return static_cast<double>(step_) * g_.dt; }
    std::size_t step() const { return step_; }

    /// u at node i of the current level.
    double u(std::size_t i) const { return u_[i + 1]; }
    const std::vector<double>& raw() const { return u_; }

    void advance()
    {
        const double dt = g_.dt;
        apply_operator(u_, t());
        for (std::size_t i = 1; i < M_; ++i) {
            const double h = 0.5 * sigma_[i] * dt;
            up_[i + 1] = (2.0 * u_[i + 1] - (1.0 - h) * um_[i + 1] + dt * dt * lu_[i]) / (1.0 + h);
        }
        ++step_;
        close_left(up_, t());
        for (std::size_t i = 0; i < M_; ++i)
            v_[i] = (up_[i + 1] - um_[i + 1]) / (2.0 * dt);
        um_.swap(u_);
        u_.swap(up_);
        if (step_ % 64 == 0)
            check();
    }

    /// Central velocity at the previous level, valid after advance().
    const std::vector<double>& velocity_lagged() const { return v_; }
    const std::vector<double>& previous() const { return um_; }

    void check() const
    {
        for (double v : u_)
            if (!(std::abs(v) <= 1e6))
                throw StabilityViolation("fd_solve: solution exceeded 1e6");
    }

private:
    void close_left(std::vector<double>& s, double t) const
    {
        s[1] = pr_.h1(t);
        s[0] = s[2] - 2.0 * dx_ * pr_.h2(t);
        s[M_ + 1] = s[M_ + 2] = 0.0;
    }

    void apply_operator(const std::vector<double>& s, double t)
    {
        lu_.assign(M_, 0.0);
        const double i2 = 1.0 / (dx_ * dx_);
        const double i4 = i2 * i2;
        for (std::size_t p = 0; p < s.size(); ++p)
            w_[p] = s[p] * s[p];
        for (std::size_t i = 1; i < M_; ++i) {
            const std::size_t p = i + 1;
            // Node 1 reaches the ghost for its i-2 neighbour.
            const double um2 = s[p - 2];
            const double d2 = (s[p + 1] - 2.0 * s[p] + s[p - 1]) * i2;
            const double d4 = (s[p + 2] - 4.0 * s[p + 1] + 6.0 * s[p] - 4.0 * s[p - 1] + um2) * i4;
            const double n2 = (w_[p + 1] - 2.0 * w_[p] + w_[p - 1]) * i2;
            double r = d2 - d4 - pr_.nonlinear * n2;
            if (pr_.forcing)
                r += pr_.forcing(x(i), t);
            lu_[i] = r;
        }
    }

    const FDProblem& pr_;
    const FDGrid& g_;
    double dx_;
    std::size_t M_;
    std::vector<double> sigma_;
    std::vector<double> um_, u_, up_, w_, lu_, v_;
    std::size_t step_ = 0;
};

std::size_t steps_per_output(const FDGrid& grid, const GridSpec& out)
{
    if (out.t_origin != 0.0)
        throw ConfigError("fd_solve: output time grid must start at t = 0");
    const double q = out.dt() / grid.dt;
    const double r = std::round(q);
    if (r < 1.0 || std::abs(q - r) > 1e-6 * r)
        throw ConfigError("fd_solve: the FD step must divide the output step");
    return static_cast<std::size_t>(r);
}

} // namespace

SpaceTimeField fd_solve(const FDProblem& problem, const FDGrid& grid, const GridSpec& out)
{
    grid.validate();
    const std::size_t q = steps_per_output(grid, out);
    SpaceTimeField result(out);
    const double dx = grid.dx();
    auto record = [&](std::size_t n, const std::vector<double>& s) {
        for (std::size_t j = out.zero_index(); j < out.nx; ++j) {
            const double xj = out.x(j);
            if (xj > grid.X_max)
                break;
            const double pos = xj / dx;
            const auto i = static_cast<std::size_t>(std::floor(pos));
            const double frac = pos - static_cast<double>(i);
            const double v = i + 1 < grid.M_x ? (1.0 - frac) * s[i + 1] + frac * s[i + 2] : s[i + 1];
            result.at(n, j) = v;
        }
    };
    Stepper st(problem, grid);
    record(0, st.previous());
    for (std::size_t n = 1; n < out.nt; ++n) {
        while (st.step() < n * q)
            st.advance();
        record(n, st.raw());
    }
    st.check();
    return result;
}

std::vector<double> fd_linear_energy(const FDProblem& problem, const FDGrid& grid, const GridSpec& out,
    double x_hi)
{
    grid.validate();
    const std::size_t q = steps_per_output(grid, out);
    const double dx = grid.dx();
    const auto n_hi = std::min(grid.M_x - 2, static_cast<std::size_t>(x_hi / dx));
    std::vector<double> energy;
    Stepper st(problem, grid);
    for (std::size_t n = 1; n + 1 < out.nt; ++n) {
        // One step past the output level so the central velocity exists there.
        while (st.step() < n * q + 1)
            st.advance();
        const auto& u = st.previous();
        const auto& v = st.velocity_lagged();
        double e = 0.0;
        for (std::size_t i = 1; i <= n_hi; ++i) {
            const std::size_t p = i + 1;
            const double ux = (u[p + 1] - u[p - 1]) / (2.0 * dx);
            const double uxx = (u[p + 1] - 2.0 * u[p] + u[p - 1]) / (dx * dx);
            e += 0.5 * dx * (v[i] * v[i] + ux * ux + uxx * uxx);
        }
        energy.push_back(e);
    }
    return energy;
}

} // namespace hlb
