#pragma once

#include <cstddef>
#include <vector>

#include "pencilscope/cmatrix.hpp"
#include "pencilscope/extended_real.hpp"
#include "pencilscope/linalg.hpp"

namespace pencilscope {

/// The pencil λB − A for square A, B of equal dimension.
class Pencil {
public:
    Pencil(CMatrix a, CMatrix b);

    const CMatrix& a() const noexcept { return a_; }
    const CMatrix& b() const noexcept { return b_; }
    std::size_t dim() const noexcept { return a_.rows(); }

    /// λB − A.
    CMatrix at(Complex lambda) const { return pencil_at(a_, b_, lambda); }

private:
    CMatrix a_;
    CMatrix b_;
};

/// (λB − A)⁻¹. Throws AtSpectrum when the LU pivot floor trips.
CMatrix resolvent_matrix(const Pencil& p, Complex lambda);

/// r_n(λ) = ‖(λB − A)^{−2ⁿ}‖^{1/2ⁿ}; +∞ at the spectrum. n = 0 goes through
/// 1/σ_min(λB − A) directly.
ExtendedReal pseudo_resolvent_norm(const Pencil& p, Complex lambda, unsigned n);

/// log10 r_n(λ), same sentinel convention.
ExtendedReal log10_pseudo_resolvent_norm(const Pencil& p, Complex lambda, unsigned n);

/// dR/dλ = −R(λ)·B·R(λ).
CMatrix resolvent_derivative(const Pencil& p, Complex lambda);

/// 1/‖B·R(λ₀)‖₂, the guaranteed radius of the series below.
double neumann_radius(const Pencil& p, Complex lambda0);

/// R(λ) = R(λ₀)·Σ_m (−(λ−λ₀)·B·R(λ₀))^m, truncated once both the last term
/// and the geometric tail bound fall under tol. Throws OutsideRadius.
CMatrix neumann_series_resolvent(const Pencil& p, Complex lambda0, Complex lambda, double tol);

/// Rank-one E with ((λB − A)^{2ⁿ} − E)u ≈ 0 and ‖E‖ = r_n(λ)^{−2ⁿ}.
struct Witness {
    CMatrix e;
    std::vector<Complex> u;
    double e_norm = 0.0;
    double defect = 0.0;
};

Witness perturbation_witness(const Pencil& p, Complex lambda, unsigned n);

/// Eigenvalues of B⁻¹A sorted by (re, im). Throws SingularB.
std::vector<Complex> eigenvalues(const Pencil& p);

/// Shifted inverse iteration with a least-squares Rayleigh quotient update.
Complex refine_eigenvalue(const Pencil& p, Complex seed, int max_iter = 60);

void sort_complex(std::vector<Complex>& z);

}  // namespace pencilscope
