#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pencilscope/blockpencil.hpp"
#include "pencilscope/cmatrix.hpp"

namespace pencilscope {

struct GridSpec;

/// Rod [0, d] with diffusivity c² in φ_t = c²φ_xx.
struct HeatParams {
    double c = 1.0;
    double d = 1.0;
    void validate() const;
};

/// λ_n = −c²(n+½)²(π/d)², n = 0..count−1.
std::vector<double> heat_eigenvalues(const HeatParams& hp, std::size_t count);

struct EigenSamples {
    double lambda = 0.0;
    std::vector<Complex> psi1;  // sinh(√λ x/c)
    std::vector<Complex> psi2;  // (√λ/c) cosh(√λ x/c)
};

EigenSamples heat_eigenfunction(const HeatParams& hp, std::size_t n, std::span<const double> xs);

/// Uniform nodes x_i = i·d/m, i = 0..m.
std::vector<double> heat_nodes(const HeatParams& hp, std::size_t m);

/// Second difference on the nodes, (m+1)×(m+1). Row 0 is zero and does not
/// feed row 1 (ψ₁(0) = 0 eliminated); row m is the ghost-point closure of a
/// zero slope at x = d.
CMatrix heat_second_difference(const HeatParams& hp, std::size_t m);
/// Centered first difference, one-sided in rows 0 and m. Column 0 is zero:
/// like D₂, it acts on ψ₁ with ψ₁(0) = 0 already eliminated.
CMatrix heat_first_difference(const HeatParams& hp, std::size_t m);

/// A1 = c²D₂, B1 = I, B3 = D₁, B4 = −I, other blocks zero.
BlockPencil heat_pencil_matrices(const HeatParams& hp, std::size_t m);

enum class Quadrature { simpson, trapezoid };

struct GreenResult {
    std::vector<Complex> u;
    std::string quadrature;  // rule actually used, e.g. "simpson" or "simpson+3/8"
    bool branch_cut = false; // λ on the negative real axis
};

/// u(x) = ∫ₓᵈ sinh(√λ(x−t)/c)/(c√λ) f(t) dt on the uniform nodes of f.
GreenResult green_resolvent_apply(const HeatParams& hp, Complex lambda, std::span<const Complex> f,
                                  Quadrature q = Quadrature::simpson);

struct Delta1 {
    double delta1 = 0.0;  // |λ|·‖D₁(λI − c²D₂)⁻¹‖
    double direct = 0.0;  // |λ|·‖D₁(λI − c²D₁²)⁻¹‖
    double split = 0.0;   // ‖(λ/2c)[(√λI − cD₁)⁻¹ − (√λI + cD₁)⁻¹]‖
};

/// Throws AtPivotSpectrum when λ ∈ σ(c²D₂).
Delta1 enclosure_delta1(const HeatParams& hp, std::size_t m, Complex lambda);

struct FtcsParams {
    std::size_t m = 10;
    double dt = 0.0;
    double dx = 0.0;
    double a = 0.0;  // c²·dt/dx²

    static FtcsParams from_a(const HeatParams& hp, std::size_t m, double a);
    static FtcsParams from_dt(const HeatParams& hp, std::size_t m, double dt);
};

/// (m+1)×(m+1): e₀ᵀ, then (a, 1−2a, a) rows, then (…, −1, 1).
CMatrix ftcs_matrix(const FtcsParams& fp);

struct FtcsRun {
    std::vector<std::vector<double>> states;  // initial state first
    bool unstable = false;                    // a > 1/2
};

FtcsRun simulate_ftcs(const FtcsParams& fp, std::span<const double> initial, std::size_t steps);

struct FoldResult {
    std::vector<double> x_left;  // −d..0 ascending
    std::vector<Complex> left;
    std::vector<double> x_right;  // 0..d
    std::vector<Complex> right;
};

/// w = (−v₁(−x) + v₂(−x))/√2 on [−d, 0], (v₁(x) + v₂(x))/√2 on [0, d].
FoldResult fold_isometry(std::span<const double> xs, std::span<const Complex> v1, std::span<const Complex> v2);

/// Trapezoid L² norm on a uniform grid.
double trapezoid_norm(std::span<const double> xs, std::span<const Complex> v);

struct HeatEnclosureReport {
    std::size_t points = 0;
    std::size_t skipped = 0;
    std::size_t in_set = 0;
    std::size_t violations = 0;
    double worst_ratio = 0.0;  // max dist/(ε(1+δ₁)) over points in the set
    double sup_delta1 = 0.0;
    std::vector<Complex> spectrum;  // σ(c²D₂)
};

/// Every grid point with r₀ ≥ 1/ε must lie within ε(1+δ₁(λ)) of σ(c²D₂).
HeatEnclosureReport heat_enclosure_check(const HeatParams& hp, std::size_t m, const GridSpec& g,
                                         std::span<const double> epsilons, bool sup_radius = false);

}  // namespace pencilscope
