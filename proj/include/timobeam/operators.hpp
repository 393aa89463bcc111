#pragma once

#include "timobeam/assembly.hpp"
#include "timobeam/materials.hpp"
#include "timobeam/mesh.hpp"
#include "timobeam/tridiag.hpp"

namespace timobeam {

/// The assembled matrices of one run, shared by the stepper and the
/// energy observer. Immutable after construction.
struct BeamOperators {
    Mesh mesh;
    Materials materials;
    TriDiag mass;          // M
    TriDiag stiffness;     // K
    TriDiag coupling;      // S
    TriDiag mass_lumped;   // row-sum lumping of M

    static BeamOperators build(const Mesh& mesh, const Materials& materials) {
        materials.validate();
        BeamOperators ops{mesh, materials, assemble_mass(mesh), assemble_stiffness(mesh),
                          assemble_coupling(mesh), TriDiag{}};
        ops.mass_lumped = lump_mass(ops.mass);
        return ops;
    }
};

}  // namespace timobeam
