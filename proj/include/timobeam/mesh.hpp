#pragma once

#include <cstddef>

#include "timobeam/errors.hpp"

namespace timobeam {

/// Uniform partition of [0, L] with homogeneous Dirichlet ends.
///
/// Nodes x_i = i*h for i = 0..n_interior+1 with h = L/(n_interior+1).
/// Only the interior nodes i = 1..n_interior carry unknowns.
struct Mesh {
    double length = 1.0;
    std::size_t n_interior = 1;

    Mesh(double L, std::size_t nx) : length(L), n_interior(nx) {
        if (!(L > 0.0)) throw ConfigError("mesh: length must be positive");
        if (nx < 1) throw ConfigError("mesh: need at least one interior node");
    }

    double spacing() const { return length / static_cast<double>(n_interior + 1); }

    /// Node coordinate, i = 0..n_interior+1.
    double node(std::size_t i) const { return static_cast<double>(i) * spacing(); }
};

}  // namespace timobeam
