#pragma once

#include "hlb/linear_flow.hpp"
#include "hlb/space_time.hpp"

namespace hlb {

/// eta(t/T) (u^2)_xx per time slice: the square is formed on a grid
/// zero-padded by pad_factor, differentiated spectrally, and truncated to
/// |xi| <= (2/3) of the Nyquist frequency.
SpaceTimeField nonlinearity(const SpaceTimeField& u, double T);

/// xi^2 / sqrt(xi^2 + xi^4) = |xi| / <xi>, zero at xi = 0.
double m_fused_multiplier(double xi);

/// Spectra (FFT order, continuous-transform scaling) of
/// int_0^{t_n} W_{R,2}^{t_n - s} G(s) ds by composite Simpson in time,
/// without any window. Requires grid.t_origin == 0.
std::vector<cplx> duhamel_spectra(const SpaceTimeField& G);

/// eta(t_n/T) times the Duhamel integral, T = G.window_T (no window if 0).
SpaceTimeField duhamel_integral(const SpaceTimeField& G);

/// q1 = eta(t/T) D(0, t), q2 = eta(t/T) D_x(0, t) of the unwindowed integral.
TracePair duhamel_traces(const SpaceTimeField& G, double T);

struct DuhamelParts {
    SpaceTimeField field;
    TracePair traces;
};

/// Both of the above from one pass; the field is windowed by eta(t/T).
DuhamelParts duhamel_with_traces(const SpaceTimeField& G, double T);

} // namespace hlb
