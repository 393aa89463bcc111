#include "timobeam/tridiag.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "timobeam/errors.hpp"

namespace timobeam {

TriDiag::TriDiag(std::size_t dim, Symmetry sym)
    : n(dim),
      sub(dim > 0 ? dim - 1 : 0, 0.0),
      main(dim, 0.0),
      super(dim > 0 ? dim - 1 : 0, 0.0),
      symmetry(sym) {}

double TriDiag::entry(std::size_t i, std::size_t j) const {
    if (i == j) return main[i];
    if (j + 1 == i) return sub[j];
    if (i + 1 == j) return super[i];
    return 0.0;
}

Vector TriDiag::apply(const Vector& x) const {
    Vector y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = main[i] * x[i];
        if (i > 0) acc += sub[i - 1] * x[i - 1];
        if (i + 1 < n) acc += super[i] * x[i + 1];
        y[i] = acc;
    }
    return y;
}

bool TriDiag::symmetry_consistent() const {
    switch (symmetry) {
        case Symmetry::symmetric:
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (sub[i] != super[i]) return false;
            return true;
        case Symmetry::skew:
            for (std::size_t i = 0; i < n; ++i)
                if (main[i] != 0.0) return false;
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (sub[i] != -super[i]) return false;
            return true;
        case Symmetry::general:
            return true;
    }
    return true;
}

Vector thomas_solve(const TriDiag& A, const Vector& rhs) {
    const std::size_t n = A.n;
    // Pivot floor: a pivot this small means the elimination has broken down.
    constexpr double min_pivot = 1e-300;

    Vector c_star(n, 0.0);
    Vector d_star(n, 0.0);

    double piv = A.main[0];
    if (std::abs(piv) < min_pivot)
        throw NumericalError("thomas_solve: singular pivot at row 0");
    if (n > 1) c_star[0] = A.super[0] / piv;
    d_star[0] = rhs[0] / piv;

    for (std::size_t i = 1; i < n; ++i) {
        piv = A.main[i] - A.sub[i - 1] * c_star[i - 1];
        if (std::abs(piv) < min_pivot)
            throw NumericalError("thomas_solve: singular pivot at row " + std::to_string(i));
        if (i + 1 < n) c_star[i] = A.super[i] / piv;
        d_star[i] = (rhs[i] - A.sub[i - 1] * d_star[i - 1]) / piv;
    }

    Vector x(n, 0.0);
    x[n - 1] = d_star[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] = d_star[i] - c_star[i] * x[i + 1];
    return x;
}

}  // namespace timobeam
