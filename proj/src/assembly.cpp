#include "timobeam/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace timobeam {

TriDiag assemble_mass(const Mesh& mesh) {
    const double h = mesh.spacing();
    TriDiag M(mesh.n_interior, TriDiag::Symmetry::symmetric);
    for (std::size_t i = 0; i < M.n; ++i) M.main[i] = 2.0 * h / 3.0;
    for (std::size_t i = 0; i + 1 < M.n; ++i) {
        M.sub[i] = h / 6.0;
        M.super[i] = h / 6.0;
    }
    return M;
}

TriDiag assemble_stiffness(const Mesh& mesh) {
    const double h = mesh.spacing();
    TriDiag K(mesh.n_interior, TriDiag::Symmetry::symmetric);
    for (std::size_t i = 0; i < K.n; ++i) K.main[i] = 2.0 / h;
    for (std::size_t i = 0; i + 1 < K.n; ++i) {
        K.sub[i] = -1.0 / h;
        K.super[i] = -1.0 / h;
    }
    return K;
}

TriDiag assemble_coupling(const Mesh& mesh) {
    TriDiag S(mesh.n_interior, TriDiag::Symmetry::skew);
    for (std::size_t i = 0; i + 1 < S.n; ++i) {
        S.super[i] = -0.5;
        S.sub[i] = 0.5;
    }
    return S;
}

TriDiag lump_mass(const TriDiag& M) {
    if (M.symmetry != TriDiag::Symmetry::symmetric)
        throw std::invalid_argument("lump_mass: matrix must be symmetric");
    TriDiag D(M.n, TriDiag::Symmetry::symmetric);
    for (std::size_t i = 0; i < M.n; ++i) {
        double row = M.main[i];
        if (i > 0) row += M.sub[i - 1];
        if (i + 1 < M.n) row += M.super[i];
        D.main[i] = row;
    }
    return D;
}

namespace {

// Hat function w_i (node index 0..Nx+1) and its derivative at x.
double hat_value(const Mesh& mesh, std::size_t i, double x) {
    const double h = mesh.spacing();
    const double xi = mesh.node(i);
    const double d = std::abs(x - xi);
    return d >= h ? 0.0 : 1.0 - d / h;
}

double hat_derivative(const Mesh& mesh, std::size_t i, double x) {
    const double h = mesh.spacing();
    const double xi = mesh.node(i);
    if (x <= xi - h || x >= xi + h) return 0.0;
    return x < xi ? 1.0 / h : -1.0 / h;
}

}  // namespace

double quadrature_entry(const Mesh& mesh, FormKind kind, std::size_t i, std::size_t j) {
    const std::size_t nx = mesh.n_interior;
    if (i < 1 || i > nx || j < 1 || j > nx)
        throw std::out_of_range("quadrature_entry: node index out of range (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");

    // Two-point Gauss rule, exact through cubic integrands; the products of
    // P1 hats and their derivatives are at most quadratic per element.
    const double h = mesh.spacing();
    const double gauss_offset = h * 0.5 / std::sqrt(3.0);

    double total = 0.0;
    for (std::size_t e = 0; e <= nx; ++e) {
        const double mid = 0.5 * (mesh.node(e) + mesh.node(e + 1));
        for (double x : {mid - gauss_offset, mid + gauss_offset}) {
            double fi, gj;
            switch (kind) {
                case FormKind::mass:
                    fi = hat_value(mesh, i, x);
                    gj = hat_value(mesh, j, x);
                    break;
                case FormKind::stiffness:
                    fi = hat_derivative(mesh, i, x);
                    gj = hat_derivative(mesh, j, x);
                    break;
                case FormKind::coupling:
                default:
                    fi = hat_derivative(mesh, i, x);
                    gj = hat_value(mesh, j, x);
                    break;
            }
            total += 0.5 * h * fi * gj;
        }
    }
    return total;
}

}  // namespace timobeam
