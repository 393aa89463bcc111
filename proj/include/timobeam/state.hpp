#pragma once

#include <cstddef>

#include "timobeam/tridiag.hpp"

namespace timobeam {

/// One time level of the four nodal fields on the interior nodes.
/// Boundary values are implicit zeros.
struct StateLevel {
    Vector phi;  // transverse displacement
    Vector psi;  // rotation angle
    Vector u;    // phi_t
    Vector v;    // psi_t

    explicit StateLevel(std::size_t nx = 0)
        : phi(nx, 0.0), psi(nx, 0.0), u(nx, 0.0), v(nx, 0.0) {}

    std::size_t size() const { return phi.size(); }
};

/// The two consecutive time levels the leapfrog scheme marches on,
/// plus the step index of the current level.
struct BeamState {
    StateLevel prev;  // level n-1
    StateLevel curr;  // level n
    long step = 0;    // n
    double dt = 0.0;

    BeamState(std::size_t nx, double dt_) : prev(nx), curr(nx), dt(dt_) {}
};

}  // namespace timobeam
