#pragma once

#include <cstddef>
#include <vector>

#include "pencilscope/cmatrix.hpp"

namespace pencilscope {

/// Relative pivot floor: a pivot below kPivotFloor·max|entry| means singular.
inline constexpr double kPivotFloor = 1e-14;

/// Largest level n accepted by the 2ⁿ-power routines.
inline constexpr unsigned kMaxLevel = 20;

/// Floor applied before taking logarithms of norms.
inline constexpr double kLogFloor = 1e-300;

/// Partial-pivot LU of a square matrix, P·M = L·U with unit-diagonal L.
struct LuFactors {
    std::vector<std::size_t> permutation;  // row i of P·M is row permutation[i] of M
    CMatrix lower_upper;                   // L strictly below the diagonal, U on and above
    bool singular = false;                 // some pivot fell under the floor
    double pivot_floor = 0.0;
};

LuFactors lu_factor(const CMatrix& m);

/// Throws SingularMatrix when the factors are flagged singular.
CMatrix lu_solve(const LuFactors& lu, const CMatrix& rhs);
CMatrix lu_solve(const CMatrix& m, const CMatrix& rhs);
std::vector<Complex> lu_solve(const LuFactors& lu, std::span<const Complex> rhs);
/// Solves (P·M)ᴴ-style adjoint systems Mᴴx = rhs from the factors of M.
std::vector<Complex> lu_solve_adjoint(const LuFactors& lu, std::span<const Complex> rhs);

CMatrix inverse(const CMatrix& m);

struct ExtremeSingularValues {
    double sigma_max = 0.0;
    double sigma_min = 0.0;
};

/// Largest and smallest singular value via Householder bidiagonalization and
/// bisection on the Golub-Kahan tridiagonal. Rectangular input is allowed;
/// sigma_min is then the smallest of min(rows, cols) values.
ExtremeSingularValues extreme_singular_values(const CMatrix& m);

/// ‖M‖₂.
double spectral_norm(const CMatrix& m);

/// All singular values, descending.
std::vector<double> singular_values(const CMatrix& m);

/// Thin SVD by one-sided Jacobi: M·V = U·diag(values). Values descending,
/// columns of `right` are the matching right singular vectors.
struct JacobiSvd {
    std::vector<double> values;
    CMatrix right;
};

JacobiSvd jacobi_svd(const CMatrix& m);

/// X^{2ⁿ} = exp(log_scale)·scaled, with ‖scaled‖_F ≤ 1 after the first step.
struct ScaledPower {
    CMatrix scaled;
    double log_scale = 0.0;  // Σ_k 2^{n−k}·log s_k
    double log_norm = 0.0;   // log ‖X^{2ⁿ}‖₂
};

ScaledPower scaled_square_power_full(const CMatrix& x, unsigned n, unsigned cap = kMaxLevel);

/// log ‖X^{2ⁿ}‖₂ through n Frobenius-rescaled squarings.
double scaled_square_power(const CMatrix& x, unsigned n, unsigned cap = kMaxLevel);

/// Eigenvalues of a general square matrix: Householder reduction to
/// Hessenberg form followed by single-shift complex QR with deflation.
std::vector<Complex> eigenvalues_general(const CMatrix& m);

}  // namespace pencilscope
