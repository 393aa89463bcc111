#pragma once

#include <cmath>

#include "timobeam/errors.hpp"

namespace timobeam {

/// Material constants of the beam: densities of the two fields, bending
/// stiffness, and shear stiffness. All runs in this project default to the
/// unit values, for which the two wave speeds coincide.
struct Materials {
    double rho1 = 1.0;
    double rho2 = 1.0;
    double bending = 1.0;  // b
    double shear = 1.0;    // k

    void validate() const {
        if (!(rho1 > 0.0 && rho2 > 0.0 && bending > 0.0 && shear > 0.0))
            throw ConfigError("materials: rho1, rho2, b, k must all be positive");
    }

    /// True when shear/rho1 == bending/rho2 to relative 1e-12; a single
    /// damping term yields exponential stability only in this regime.
    bool equal_wave_speeds() const {
        const double a = shear / rho1;
        const double b = bending / rho2;
        return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
    }
};

}  // namespace timobeam
