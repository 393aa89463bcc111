#pragma once

#include <cstddef>
#include <vector>

namespace timobeam {

using Vector = std::vector<double>;

/// Tridiagonal matrix stored as three diagonal arrays.
///
/// sub[i]  = A(i+1, i),  i = 0..n-2
/// main[i] = A(i, i),    i = 0..n-1
/// super[i]= A(i, i+1),  i = 0..n-2
struct TriDiag {
    enum class Symmetry { symmetric, skew, general };

    std::size_t n = 0;
    Vector sub;
    Vector main;
    Vector super;
    Symmetry symmetry = Symmetry::general;

    TriDiag() = default;
    TriDiag(std::size_t dim, Symmetry sym);

    /// Entry A(i, j), zero outside the three diagonals. Indices are 0-based.
    double entry(std::size_t i, std::size_t j) const;

    /// y = A * x.
    Vector apply(const Vector& x) const;

    /// True if the stored diagonals satisfy the declared symmetry tag.
    bool symmetry_consistent() const;
};

/// Solves A * x = rhs by the Thomas algorithm (no pivoting; the matrices
/// assembled here are diagonally dominant or SPD).
///
/// Throws NumericalError if a pivot magnitude underflows.
Vector thomas_solve(const TriDiag& A, const Vector& rhs);

}  // namespace timobeam
