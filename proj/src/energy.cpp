#include "timobeam/energy.hpp"

#include <cmath>
#include <cstddef>

namespace timobeam {

double quad_form(const TriDiag& A, const Vector& x, const Vector& y) {
    const Vector Ay = A.apply(y);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * Ay[i];
    return acc;
}

double energy_diagonal(const StateLevel& s, const TriDiag& M, const TriDiag& K,
                       const Materials& mat) {
    return 0.5 * (mat.rho1 * quad_form(M, s.u, s.u) + mat.rho2 * quad_form(M, s.v, s.v) +
                  mat.shear * quad_form(K, s.phi, s.phi) + mat.bending * quad_form(K, s.psi, s.psi) +
                  mat.shear * quad_form(M, s.psi, s.psi));
}

namespace {

// integral over [0, L] of (phi_x + psi)^2 for the P1 interpolants, element by
// element. On one element phi_x is the constant c and psi runs linearly from
// a to b, giving h/3 (p^2 + pq + q^2) with p = c+a, q = c+b. The integrand is
// written as 3/4 (p+q)^2 + 1/4 (p-q)^2 so every addend is a square and the
// sum cannot round below zero.
double shear_integral(const Vector& phi, const Vector& psi, double h) {
    const std::size_t nx = phi.size();
    auto node = [&](const Vector& w, std::size_t i) {
        return (i == 0 || i > nx) ? 0.0 : w[i - 1];  // Dirichlet ends
    };
    double total = 0.0;
    for (std::size_t e = 0; e <= nx; ++e) {
        const double c = (node(phi, e + 1) - node(phi, e)) / h;
        const double p = c + node(psi, e);
        const double q = c + node(psi, e + 1);
        total += (h / 3.0) * (0.75 * (p + q) * (p + q) + 0.25 * (p - q) * (p - q));
    }
    return total;
}

}  // namespace

double energy_physical(const StateLevel& s, const TriDiag& M, const TriDiag& K,
                       double spacing, const Materials& mat) {
    return 0.5 * (mat.rho1 * quad_form(M, s.u, s.u) + mat.rho2 * quad_form(M, s.v, s.v) +
                  mat.bending * quad_form(K, s.psi, s.psi) +
                  mat.shear * shear_integral(s.phi, s.psi, spacing));
}

double energy_diagonal(const StateLevel& s, const BeamOperators& ops) {
    return energy_diagonal(s, ops.mass, ops.stiffness, ops.materials);
}

double energy_physical(const StateLevel& s, const BeamOperators& ops) {
    return energy_physical(s, ops.mass, ops.stiffness, ops.mesh.spacing(), ops.materials);
}

double predicted_dissipation_rate(const DampingModel& damping, const BeamOperators& ops,
                                  const Vector& v_prev, const Vector& v_curr,
                                  const Vector& v_next, const Vector& psi_curr) {
    const std::size_t n = v_curr.size();
    switch (damping.tag) {
        case DampingModel::Tag::undamped:
            return 0.0;

        case DampingModel::Tag::linear:
            return -damping.mu * quad_form(ops.mass, v_curr, v_curr);

        case DampingModel::Tag::power_law: {
            Vector avg2(n);  // V^{n+1} + V^{n-1}
            for (std::size_t i = 0; i < n; ++i) avg2[i] = v_next[i] + v_prev[i];
            if (damping.pairing == DampingModel::MassPairing::lumped) {
                double acc = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    acc += ops.mass_lumped.main[i] * std::abs(v_curr[i]) * avg2[i] * avg2[i];
                return -0.25 * acc;
            }
            Vector scaled(n);
            for (std::size_t i = 0; i < n; ++i) scaled[i] = std::abs(v_curr[i]) * avg2[i];
            return -0.25 * quad_form(ops.mass, avg2, scaled);
        }

        case DampingModel::Tag::exp_flat: {
            if (damping.literal_mode) {
                Vector g(n);
                for (std::size_t i = 0; i < n; ++i) g[i] = flat_exp(psi_curr[i]);
                const Vector force = ops.stiffness.apply(g);
                double acc = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    acc += force[i] * 0.5 * (v_next[i] + v_prev[i]);
                return -acc;
            }
            const TriDiag& D = damping.pairing == DampingModel::MassPairing::lumped
                                   ? ops.mass_lumped
                                   : ops.mass;
            Vector g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = odd_flat_exp(v_curr[i]);
            const Vector force = D.apply(g);
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += force[i] * 0.5 * (v_next[i] + v_prev[i]);
            return -acc;
        }
    }
    return 0.0;
}

double identity_residual(double e_phys_prev, double e_phys_next, double dt,
                         double predicted_rate) {
    return (e_phys_next - e_phys_prev) / (2.0 * dt) - predicted_rate;
}

}  // namespace timobeam
