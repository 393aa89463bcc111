#pragma once

#include <string>

namespace timobeam {

/// Odd extension of the flat-at-zero damping nonlinearity:
/// sign(s) * exp(-1/s^2), with the value 0 at s = 0. The odd extension keeps
/// s * g(s) >= 0, which the dissipation identities require.
double odd_flat_exp(double s);

/// The one-sided variant exp(-1/s^2) (positive for all s != 0), used by the
/// scheme-literal mode that applies the nonlinearity to the rotation angle.
double flat_exp(double s);

/// odd_flat_exp(s) / s, continued by 0 at s = 0 (bounded by ~0.43). Freezing
/// this ratio turns the flat-exponential damping into a linear-in-V term per
/// step, so it can be time-centered like the other damping models.
double flat_exp_ratio(double s);

/// Damping regime applied to the rotation equation.
struct DampingModel {
    enum class Tag { undamped, linear, power_law, exp_flat };

    /// Mass matrix paired with the damping term: the consistent tridiagonal
    /// mass or its row-sum lumping. Lumping makes the nonlinear dissipation
    /// identities sign-definite.
    enum class MassPairing { consistent, lumped };

    Tag tag = Tag::undamped;
    double mu = 0.0;  // linear damping coefficient, > 0 for Tag::linear
    MassPairing pairing = MassPairing::consistent;

    /// Scheme-literal mode. For linear damping the term is evaluated
    /// explicitly at the current level instead of the time-centered average;
    /// for exp_flat the nonlinearity is applied to the rotation angle with a
    /// stiffness prefactor instead of to the velocity with a lumped-mass
    /// prefactor.
    bool literal_mode = false;

    static DampingModel undamped() { return {}; }
    static DampingModel linear(double mu);
    static DampingModel power_law();
    static DampingModel exp_flat();

    bool damped() const { return tag != Tag::undamped; }
    std::string describe() const;
};

}  // namespace timobeam
