#pragma once

// Small dense linear algebra for test oracles. Deliberately independent of
// the tridiagonal storage and the Thomas solver in the library.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace testsupport {

using DenseMatrix = std::vector<std::vector<double>>;

inline DenseMatrix dense_zero(std::size_t n) {
    return DenseMatrix(n, std::vector<double>(n, 0.0));
}

inline std::vector<double> dense_apply(const DenseMatrix& A, const std::vector<double>& x) {
    const std::size_t n = A.size();
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += A[i][j] * x[j];
    return y;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(DenseMatrix A, std::vector<double> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
        if (std::abs(A[pivot][col]) < 1e-300)
            throw std::runtime_error("dense_solve: singular matrix");
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= A[i][j] * x[j];
        x[i] = acc / A[i][i];
    }
    return x;
}

}  // namespace testsupport
