#pragma once

#include "timobeam/mesh.hpp"
#include "timobeam/tridiag.hpp"

namespace timobeam {

/// Which bilinear form an assembled entry belongs to.
enum class FormKind {
    mass,       // (w_i, w_j)
    stiffness,  // (w_i', w_j')
    coupling,   // (w_i', w_j)
};

/// Mass matrix M(i,j) = (w_i, w_j) over interior hat functions.
/// Symmetric positive definite: main diagonal 2h/3, off-diagonals h/6.
TriDiag assemble_mass(const Mesh& mesh);

/// Stiffness matrix K(i,j) = (w_i', w_j').
/// Symmetric positive definite: main diagonal 2/h, off-diagonals -1/h.
TriDiag assemble_stiffness(const Mesh& mesh);

/// First-derivative coupling matrix S(i,j) = (w_i', w_j).
/// Skew-symmetric and h-independent: super-diagonal -1/2, sub-diagonal +1/2.
TriDiag assemble_coupling(const Mesh& mesh);

/// Row-sum lumping of a symmetric matrix: a diagonal matrix carrying the
/// row sums, so the total mass (sum of all entries) is preserved.
TriDiag lump_mass(const TriDiag& M);

/// Independent evaluation of one matrix entry by composite two-point Gauss
/// quadrature over every element, exact for the piecewise-polynomial
/// integrands. Node indices are 1-based interior indices (1 <= i,j <= Nx).
///
/// Used to cross-check the closed-form assembly above; deliberately shares
/// no code with it.
double quadrature_entry(const Mesh& mesh, FormKind kind, std::size_t i, std::size_t j);

}  // namespace timobeam
