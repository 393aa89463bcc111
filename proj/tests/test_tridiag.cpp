#include <doctest.h>

#include <cmath>
#include <random>

#include "timobeam/assembly.hpp"
#include "timobeam/errors.hpp"
#include "timobeam/tridiag.hpp"

using namespace timobeam;

TEST_CASE("thomas_solve: diagonal system is a plain division") {
    TriDiag A(4, TriDiag::Symmetry::symmetric);
    A.main = {2.0, 4.0, 8.0, 16.0};
    const Vector x = thomas_solve(A, {2.0, 4.0, 8.0, 16.0});
    for (double xi : x) CHECK(xi == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("thomas_solve: 1x1 mass system [1/3] x = 2") {
    TriDiag A(1, TriDiag::Symmetry::symmetric);
    A.main = {1.0 / 3.0};
    const Vector x = thomas_solve(A, {2.0});
    CHECK(x[0] == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("thomas_solve: round-trip through the mass matrix of mesh(L=2, Nx=3)") {
    const Mesh mesh(2.0, 3);
    const TriDiag M = assemble_mass(mesh);
    const Vector expected = {1.0, 2.0, 3.0};
    const Vector x = thomas_solve(M, M.apply(expected));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(x[i] - expected[i]) <= 1e-12);
}

TEST_CASE("thomas_solve: residual stays below 1e-12 * |rhs| on random SPD-ish systems") {
    std::mt19937 rng(20240901);
    std::uniform_real_distribution<double> offdiag(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        TriDiag A(n, TriDiag::Symmetry::general);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            A.sub[i] = offdiag(rng);
            A.super[i] = offdiag(rng);
        }
        for (std::size_t i = 0; i < n; ++i) A.main[i] = 3.0 + offdiag(rng);  // diag dominant
        Vector rhs(n);
        double rhs_norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rhs[i] = offdiag(rng);
            rhs_norm = std::max(rhs_norm, std::abs(rhs[i]));
        }
        const Vector x = thomas_solve(A, rhs);
        const Vector back = A.apply(x);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(back[i] - rhs[i]) <= 1e-12 * std::max(1.0, rhs_norm));
    }
}

TEST_CASE("thomas_solve: singular pivot is reported") {
    TriDiag A(2, TriDiag::Symmetry::general);
    A.main = {0.0, 1.0};
    CHECK_THROWS_AS(thomas_solve(A, {1.0, 1.0}), NumericalError);

    // Elimination can also hit a zero pivot on a later row.
    TriDiag B(2, TriDiag::Symmetry::general);
    B.main = {1.0, 1.0};
    B.sub = {1.0};
    B.super = {1.0};
    CHECK_THROWS_AS(thomas_solve(B, {1.0, 1.0}), NumericalError);
}

TEST_CASE("TriDiag: entry accessor matches the diagonal storage") {
    TriDiag A(3, TriDiag::Symmetry::general);
    A.main = {1.0, 2.0, 3.0};
    A.sub = {4.0, 5.0};
    A.super = {6.0, 7.0};
    CHECK(A.entry(0, 0) == 1.0);
    CHECK(A.entry(1, 0) == 4.0);
    CHECK(A.entry(0, 1) == 6.0);
    CHECK(A.entry(2, 1) == 5.0);
    CHECK(A.entry(1, 2) == 7.0);
    CHECK(A.entry(0, 2) == 0.0);
    CHECK(A.entry(2, 0) == 0.0);
}
