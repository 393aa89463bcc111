#pragma once

#include "timobeam/damping.hpp"
#include "timobeam/energy.hpp"
#include "timobeam/operators.hpp"
#include "timobeam/run_config.hpp"
#include "timobeam/state.hpp"

namespace timobeam {

/// Nodal interpolation of the chosen initial data at the interior nodes,
/// scaled by `amplitude`; velocities start at zero. Boundary nodes carry no
/// unknowns, so the Dirichlet condition holds regardless of the preset's
/// pointwise boundary values.
StateLevel initial_conditions(ICKind kind, const Mesh& mesh, double amplitude,
                              int mode_number = 2);

/// One-sided (non-centered Euler) start taking level 0 to level 1: the
/// semi-discrete system is integrated from t = 0 to t = dt by `substeps`
/// forward-Euler substeps, with the damping force evaluated explicitly at
/// each substep. On return the state holds levels (0, 1) and step == 1.
///
/// With substeps = 1 this is the plain one-step Euler start. A single step
/// injects O((w*dt)^2) spurious kinetic energy into the fastest mesh modes,
/// which at coarse dt*w is large enough to break the dissipation law over
/// the first level pair; run_simulation therefore uses startup_substeps().
void startup_step(BeamState& state, const BeamOperators& ops, const DampingModel& damping,
                  long substeps = 1);

/// Automatic substep count for the startup: small enough that the substep
/// resolves the fastest mesh frequency, capped for degenerate inputs.
long startup_substeps(const BeamOperators& ops, double dt);

/// One centered leapfrog step: consumes levels (n-1, n), produces (n, n+1).
///
/// The velocity update depends on the damping model:
///   undamped   fully explicit;
///   linear     time-centered average of V in the damping term (exact
///              per-component solve; scheme-literal mode uses explicit V^n);
///   power_law  time-centered average with the |V^n| factor frozen -- an
///              exact per-component solve under consistent pairing, a
///              tridiagonal solve under lumped pairing;
///   exp_flat   time-centered like power_law with the frozen coefficient
///              g(V^n)/V^n (explicit g(V^n) would feed the parasitic mode);
///              scheme-literal mode instead applies g to Psi^n with a
///              stiffness prefactor, explicitly.
///
/// Throws NumericalError naming the step if the new level is not finite.
void leapfrog_step(BeamState& state, const BeamOperators& ops, const DampingModel& damping);

struct SimulationResult {
    BeamState final_state;
    EnergyTrace trace;
};

/// Startup step followed by steps()-1 leapfrog steps, recording the energy
/// observer at every level. The trace has steps()+1 samples; dissipation
/// rate and identity residual are filled on interior levels.
SimulationResult run_simulation(const RunConfig& config);

/// Same, but starting from caller-provided level-0 data instead of the
/// configured initial-condition preset.
SimulationResult run_simulation(const RunConfig& config, const StateLevel& initial);

}  // namespace timobeam
