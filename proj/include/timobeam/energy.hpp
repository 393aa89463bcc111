#pragma once

#include <string>
#include <vector>

#include "timobeam/damping.hpp"
#include "timobeam/operators.hpp"
#include "timobeam/state.hpp"

namespace timobeam {

/// Energies and dissipation bookkeeping for one recorded time level.
///
/// identity_residual and dissipation_rate need the neighbouring levels and
/// are recorded as 0 at the first and last level of a trace.
struct EnergySample {
    long step = 0;
    double t = 0.0;
    double e_diagonal = 0.0;   // block-diagonal energy (trace column E_paper)
    double e_physical = 0.0;   // includes the shear cross term (column E_phys)
    double dissipation_rate = 0.0;   // model prediction, 0 when undamped
    double identity_residual = 0.0;  // realized centered rate minus prediction
};

struct EnergyTrace {
    std::vector<EnergySample> samples;
    std::string fingerprint;  // hash of the generating configuration
};

/// x' * (A * y).
double quad_form(const TriDiag& A, const Vector& x, const Vector& y);

/// Block-diagonal energy: the weighted sum of squared M- and K-norms
///   1/2 (rho1 |U|_M^2 + rho2 |V|_M^2 + k |Phi|_K^2 + b |Psi|_K^2 + k |Psi|_M^2).
/// With unit materials this is the plain norm sum. It omits the shear cross
/// term, so it is not exactly what the scheme transports.
double energy_diagonal(const StateLevel& s, const TriDiag& M, const TriDiag& K,
                       const Materials& mat = {});

/// Physically consistent energy: kinetic and bending terms as above, plus the
/// full Galerkin shear term 1/2 k * integral (phi_x + psi)^2. The shear term
/// is evaluated element by element as a sum of squares, so the result is
/// nonnegative unconditionally, including in floating point.
///
/// Differs from energy_diagonal by exactly k * Phi' S Psi.
double energy_physical(const StateLevel& s, const TriDiag& M, const TriDiag& K,
                       double spacing, const Materials& mat = {});

double energy_diagonal(const StateLevel& s, const BeamOperators& ops);
double energy_physical(const StateLevel& s, const BeamOperators& ops);

/// Model-predicted dissipation rate at level n, from the three velocity
/// levels n-1, n, n+1 (and the rotation angle at n for the scheme-literal
/// flat-exponential mode):
///   undamped    0
///   linear      -mu |V^n|_M^2
///   power_law   -1/4 (V^{n+1}+V^{n-1})' D diag(|V^n|) (V^{n+1}+V^{n-1})
///   exp_flat    -(D g_odd(V^n))' (V^{n+1}+V^{n-1})/2
/// where D is the consistent or lumped mass per the model's pairing. Under
/// lumping the power_law rate is a negative sum of squares, hence <= 0 at
/// every step; with the consistent mass no sign guarantee exists.
double predicted_dissipation_rate(const DampingModel& damping, const BeamOperators& ops,
                                  const Vector& v_prev, const Vector& v_curr,
                                  const Vector& v_next, const Vector& psi_curr);

/// Realized centered energy rate minus the model prediction,
/// (E^{n+1} - E^{n-1}) / (2 dt) - predicted_rate, using the physical energy.
double identity_residual(double e_phys_prev, double e_phys_next, double dt,
                         double predicted_rate);

}  // namespace timobeam
