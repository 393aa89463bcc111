#include "timobeam/stepper.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "timobeam/errors.hpp"

namespace timobeam {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Force on the displacement-velocity equation: -k (K phi + S psi).
Vector u_force(const BeamOperators& ops, const StateLevel& s) {
    const Vector kphi = ops.stiffness.apply(s.phi);
    const Vector spsi = ops.coupling.apply(s.psi);
    const double k = ops.materials.shear;
    Vector f(s.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = -k * (kphi[i] + spsi[i]);
    return f;
}

// Force on the rotation-velocity equation, damping excluded:
// -b K psi + k S phi - k M psi.
Vector v_force(const BeamOperators& ops, const StateLevel& s) {
    const Vector kpsi = ops.stiffness.apply(s.psi);
    const Vector sphi = ops.coupling.apply(s.phi);
    const Vector mpsi = ops.mass.apply(s.psi);
    const double b = ops.materials.bending;
    const double k = ops.materials.shear;
    Vector f(s.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = -b * kpsi[i] + k * sphi[i] - k * mpsi[i];
    return f;
}

const TriDiag& pairing_mass(const BeamOperators& ops, const DampingModel& damping) {
    return damping.pairing == DampingModel::MassPairing::lumped ? ops.mass_lumped : ops.mass;
}

// Damping force evaluated explicitly at one level (used by the startup step
// and by the models without time centering).
Vector explicit_damping_force(const BeamOperators& ops, const DampingModel& damping,
                              const StateLevel& s) {
    const std::size_t n = s.size();
    Vector g(n, 0.0);
    switch (damping.tag) {
        case DampingModel::Tag::undamped:
            return g;
        case DampingModel::Tag::linear:
            for (std::size_t i = 0; i < n; ++i) g[i] = damping.mu * s.v[i];
            return pairing_mass(ops, damping).apply(g);
        case DampingModel::Tag::power_law:
            for (std::size_t i = 0; i < n; ++i) g[i] = std::abs(s.v[i]) * s.v[i];
            return pairing_mass(ops, damping).apply(g);
        case DampingModel::Tag::exp_flat:
            if (damping.literal_mode) {
                for (std::size_t i = 0; i < n; ++i) g[i] = flat_exp(s.psi[i]);
                return ops.stiffness.apply(g);
            }
            for (std::size_t i = 0; i < n; ++i) g[i] = odd_flat_exp(s.v[i]);
            return pairing_mass(ops, damping).apply(g);
    }
    return g;
}

// Per-component coefficients d_i of the time-centered damping term
// D diag(d) (V^{n+1}+V^{n-1})/2. All non-literal damping models are centered
// this way: explicit odd damping of V^n would feed the leapfrog parasitic
// mode and grow without bound.
bool centered_damping_coefficients(const DampingModel& damping, const Vector& v_curr, Vector& d) {
    switch (damping.tag) {
        case DampingModel::Tag::linear:
            if (damping.literal_mode) return false;
            d.assign(v_curr.size(), damping.mu);
            return true;
        case DampingModel::Tag::power_law:
            d.resize(v_curr.size());
            for (std::size_t i = 0; i < v_curr.size(); ++i) d[i] = std::abs(v_curr[i]);
            return true;
        case DampingModel::Tag::exp_flat:
            if (damping.literal_mode) return false;
            d.resize(v_curr.size());
            for (std::size_t i = 0; i < v_curr.size(); ++i) d[i] = flat_exp_ratio(v_curr[i]);
            return true;
        default:
            return false;
    }
}

void check_finite(const StateLevel& s, long step) {
    for (const Vector* field : {&s.phi, &s.psi, &s.u, &s.v})
        for (double x : *field)
            if (!std::isfinite(x))
                throw NumericalError(
                    "state became nonfinite at step " + std::to_string(step) +
                        " (time step too large for this mesh?)",
                    step);
}

}  // namespace

StateLevel initial_conditions(ICKind kind, const Mesh& mesh, double amplitude, int mode_number) {
    StateLevel s(mesh.n_interior);
    const double L = mesh.length;
    for (std::size_t i = 1; i <= mesh.n_interior; ++i) {
        const double x = mesh.node(i);
        switch (kind) {
            case ICKind::cos_sin:
                s.phi[i - 1] = amplitude * std::cos(2.0 * kPi * x / L);
                s.psi[i - 1] = amplitude * std::sin(2.0 * kPi * x / L);
                break;
            case ICKind::sine_mode:
                s.phi[i - 1] = amplitude * std::sin(mode_number * kPi * x / L);
                s.psi[i - 1] = amplitude * std::cos(mode_number * kPi * x / L);
                break;
            case ICKind::sine_pair:
                s.phi[i - 1] = amplitude * std::sin(mode_number * kPi * x / L);
                s.psi[i - 1] = amplitude * std::sin(mode_number * kPi * x / L);
                break;
        }
    }
    return s;
}

long startup_substeps(const BeamOperators& ops, double dt) {
    const Materials& mat = ops.materials;
    const double h = ops.mesh.spacing();
    // sqrt(12)/h bounds the P1 stencil spectrum; the k-term adds an O(1)
    // frequency to the rotation equation.
    const double omega = std::sqrt(12.0 * std::max(mat.bending, mat.shear) /
                                   std::min(mat.rho1, mat.rho2)) /
                             h +
                         std::sqrt(mat.shear / mat.rho2);
    // At least 64 substeps keeps the substep size proportional to dt, so the
    // startup error refines at second order alongside the leapfrog drift; the
    // frequency term takes over for very coarse dt*omega.
    const double needed = std::ceil(10.0 * std::abs(dt) * omega);
    return std::clamp(static_cast<long>(needed), 64L, 4096L);
}

void startup_step(BeamState& state, const BeamOperators& ops, const DampingModel& damping,
                  long substeps) {
    const StateLevel s0 = state.curr;
    const double ddt = state.dt / static_cast<double>(substeps);
    const std::size_t n = s0.size();

    StateLevel s = s0;
    for (long sub = 0; sub < substeps; ++sub) {
        const Vector du = thomas_solve(ops.mass, u_force(ops, s));
        Vector rv = v_force(ops, s);
        const Vector fd = explicit_damping_force(ops, damping, s);
        for (std::size_t i = 0; i < n; ++i) rv[i] -= fd[i];
        const Vector dv = thomas_solve(ops.mass, rv);

        StateLevel next(n);
        for (std::size_t i = 0; i < n; ++i) {
            next.phi[i] = s.phi[i] + ddt * s.u[i];
            next.psi[i] = s.psi[i] + ddt * s.v[i];
            next.u[i] = s.u[i] + ddt * du[i] / ops.materials.rho1;
            next.v[i] = s.v[i] + ddt * dv[i] / ops.materials.rho2;
        }
        s = std::move(next);
    }

    state.prev = s0;
    state.curr = std::move(s);
    state.step += 1;
    check_finite(state.curr, state.step);
}

void leapfrog_step(BeamState& state, const BeamOperators& ops, const DampingModel& damping) {
    const StateLevel& sm = state.prev;  // level n-1
    const StateLevel& sc = state.curr;  // level n
    const double dt = state.dt;
    const double rho1 = ops.materials.rho1;
    const double rho2 = ops.materials.rho2;
    const std::size_t n = sc.size();

    StateLevel sp(n);  // level n+1
    for (std::size_t i = 0; i < n; ++i) {
        sp.phi[i] = sm.phi[i] + 2.0 * dt * sc.u[i];
        sp.psi[i] = sm.psi[i] + 2.0 * dt * sc.v[i];
    }

    const Vector du = thomas_solve(ops.mass, u_force(ops, sc));
    for (std::size_t i = 0; i < n; ++i) sp.u[i] = sm.u[i] + 2.0 * dt * du[i] / rho1;

    Vector d;
    if (centered_damping_coefficients(damping, sc.v, d)) {
        if (damping.pairing == DampingModel::MassPairing::consistent) {
            // The damping term carries the same mass that is inverted, so the
            // update is an exact per-component solve:
            // (rho2 + dt d_i) V_i^{n+1} = (rho2 - dt d_i) V_i^{n-1} + 2 dt W_i.
            const Vector w = thomas_solve(ops.mass, v_force(ops, sc));
            for (std::size_t i = 0; i < n; ++i)
                sp.v[i] = ((rho2 - dt * d[i]) * sm.v[i] + 2.0 * dt * w[i]) / (rho2 + dt * d[i]);
        } else {
            // Lumped damping mass: (rho2 M + dt M_L diag(d)) V^{n+1}
            //   = (rho2 M - dt M_L diag(d)) V^{n-1} + 2 dt R.
            const Vector rv = v_force(ops, sc);
            TriDiag lhs = ops.mass;
            lhs.symmetry = TriDiag::Symmetry::general;
            for (std::size_t i = 0; i < n; ++i) {
                lhs.main[i] = rho2 * lhs.main[i] + dt * ops.mass_lumped.main[i] * d[i];
            }
            for (std::size_t i = 0; i + 1 < n; ++i) {
                lhs.sub[i] *= rho2;
                lhs.super[i] *= rho2;
            }
            const Vector mv = ops.mass.apply(sm.v);
            Vector rhs(n);
            for (std::size_t i = 0; i < n; ++i)
                rhs[i] = rho2 * mv[i] - dt * ops.mass_lumped.main[i] * d[i] * sm.v[i] +
                         2.0 * dt * rv[i];
            sp.v = thomas_solve(lhs, rhs);
        }
    } else {
        Vector rv = v_force(ops, sc);
        const Vector fd = explicit_damping_force(ops, damping, sc);
        for (std::size_t i = 0; i < n; ++i) rv[i] -= fd[i];
        const Vector dv = thomas_solve(ops.mass, rv);
        for (std::size_t i = 0; i < n; ++i) sp.v[i] = sm.v[i] + 2.0 * dt * dv[i] / rho2;
    }

    state.prev = sc;
    state.curr = std::move(sp);
    state.step += 1;
    check_finite(state.curr, state.step);
}

SimulationResult run_simulation(const RunConfig& config) {
    return run_simulation(
        config, initial_conditions(config.ic, config.mesh(), config.amplitude, config.mode_number));
}

SimulationResult run_simulation(const RunConfig& config, const StateLevel& initial) {
    const Mesh mesh = config.mesh();
    const BeamOperators ops = BeamOperators::build(mesh, config.materials);
    const DampingModel damping = config.damping_model();
    const double dt = config.dt();
    const long n_steps = config.steps();

    BeamState state(mesh.n_interior, dt);
    state.curr = initial;

    EnergyTrace trace;
    trace.fingerprint = config.fingerprint();
    trace.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

    auto record = [&](const StateLevel& level, long step) {
        EnergySample sample;
        sample.step = step;
        sample.t = static_cast<double>(step) * dt;
        sample.e_diagonal = energy_diagonal(level, ops);
        sample.e_physical = energy_physical(level, ops);
        trace.samples.push_back(sample);
    };

    record(state.curr, 0);
    startup_step(state, ops, damping, startup_substeps(ops, dt));
    record(state.curr, 1);

    Vector v_before_prev;  // V^{n-1} stashed before the step overwrites it
    for (long n = 1; n < n_steps; ++n) {
        v_before_prev = state.prev.v;
        const double e_prev = trace.samples[static_cast<std::size_t>(n) - 1].e_physical;

        leapfrog_step(state, ops, damping);
        record(state.curr, n + 1);

        // Fill the bookkeeping of the now-interior level n: state.prev holds
        // V^n and state.curr holds V^{n+1}.
        EnergySample& mid = trace.samples[static_cast<std::size_t>(n)];
        mid.dissipation_rate = predicted_dissipation_rate(damping, ops, v_before_prev,
                                                          state.prev.v, state.curr.v,
                                                          state.prev.psi);
        mid.identity_residual = identity_residual(
            e_prev, trace.samples[static_cast<std::size_t>(n) + 1].e_physical, dt,
            mid.dissipation_rate);
    }

    return SimulationResult{std::move(state), std::move(trace)};
}

}  // namespace timobeam
