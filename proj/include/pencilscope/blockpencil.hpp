#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pencilscope/cmatrix.hpp"
#include "pencilscope/pencil.hpp"

namespace pencilscope {

struct GridSpec;

/// λB − A = [[λB1−A1, λB2−A2], [λB3−A3, λB4−A4]], all blocks m×m.
struct BlockPencil {
    CMatrix a1, a2, a3, a4;
    CMatrix b1, b2, b3, b4;

    std::size_t block_size() const noexcept { return a1.rows(); }
    void validate() const;
};

Pencil assemble(const BlockPencil& bp);

/// first: pivot λB4−A4, complement S1 = A1 + (λB2−A2)(λB4−A4)⁻¹(λB3−A3).
/// second: pivot λB1−A1, complement S2 = A4 + (λB3−A3)(λB1−A1)⁻¹(λB2−A2).
enum class Complement { first, second };

std::string to_string(Complement c);
Complement parse_complement(const std::string& s);

struct SchurData {
    Complement complement = Complement::first;
    Complex lambda;
    CMatrix s;  // S(λ)
    CMatrix f;  // first: (λB2−A2)P⁻¹   second: (λB3−A3)P⁻¹
    CMatrix g;  // first: P⁻¹(λB3−A3)   second: P⁻¹(λB2−A2)
    CMatrix pivot_inverse;
};

/// Throws AtPivotSpectrum when the pivot block is singular at λ.
SchurData schur_complement(const BlockPencil& bp, Complex lambda, Complement c);

/// The diagonal pencil opposite the Schur complement: (A4, B4) or (A1, B1).
Pencil pivot_pencil(const BlockPencil& bp, Complement c);
/// (S(λ), B1) for first, (S(λ), B4) for second.
Pencil schur_pencil(const BlockPencil& bp, const SchurData& sd);

/// ‖L·D·U − (λB−A)‖_F / ‖λB−A‖_F for the triangular-diagonal-triangular factors.
double factorization_residual(const BlockPencil& bp, Complex lambda, Complement c);

/// Inverse from the factors. Throws AtPivotSpectrum or SchurSingular.
CMatrix resolvent_via_schur(const BlockPencil& bp, Complex lambda, Complement c);

/// min of ‖M_S1‖, ‖N_S1‖, ‖M_S2‖, ‖N_S2‖; a value < 1 certifies λ ∈ ρ(A,B).
double spectral_indicator(const BlockPencil& bp, Complex lambda);

struct EnclosureFactors {
    double delta1 = 0.0;  // ‖G‖
    double delta2 = 0.0;  // ‖F‖
    unsigned n = 0;
    double inflation = 1.0;            // ((1+δ1^{2ⁿ})(1+δ2^{2ⁿ}))^{1/2ⁿ}
    double corrected_inflation = 1.0;  // ((1+2ⁿδ1)(1+2ⁿδ2))^{1/2ⁿ}
};

EnclosureFactors enclosure_factors(const BlockPencil& bp, Complex lambda, Complement c, unsigned n);
/// Inflation formulas from δ values directly (log domain).
double inflation_factor(double delta1, double delta2, unsigned n);
double corrected_inflation_factor(double delta1, double delta2, unsigned n);

struct HypothesisReport {
    bool gf_zero = false;
    bool fg_zero = false;
    bool g_intertwines = false;
    bool f_intertwines = false;
    bool all() const noexcept { return gf_zero && fg_zero && g_intertwines && f_intertwines; }
};

HypothesisReport verify_hypotheses(const BlockPencil& bp, Complex lambda, Complement c, double tol = 1e-10);

enum class InflationRule { stated, corrected };

struct EnclosureOptions {
    Complement complement = Complement::second;
    unsigned n = 0;
    InflationRule rule = InflationRule::stated;
    bool sup_radius = false;  // use grid-supremum δ's instead of pointwise
};

struct EnclosurePoint {
    Complex lambda;
    double epsilon = 0.0;
    double full = 0.0;   // log10 r_n of the assembled pencil
    bool full_infinite = false;
    double pivot = 0.0;  // log10 r_n of the pivot pencil
    double schur = 0.0;  // log10 r_n of the Schur pencil at λ
    double delta1 = 0.0, delta2 = 0.0, inflation = 1.0;
    bool violated = false;
};

struct EnclosureSweep {
    std::vector<double> epsilons;
    std::size_t points = 0;
    std::size_t skipped = 0;    // pivot block singular
    std::size_t in_set = 0;     // (point, ε) pairs with r_n ≥ 1/ε
    std::size_t violations = 0;
    double sup_delta1 = 0.0, sup_delta2 = 0.0;
    std::vector<EnclosurePoint> failures;
};

/// Checks, at every grid point and ε, that r_n(full) ≥ 1/ε implies
/// max(r_n(pivot), r_n(Schur)) ≥ 1/(ε·inflation).
EnclosureSweep enclosure_sweep(const BlockPencil& bp, const GridSpec& g, std::span<const double> epsilons,
                               const EnclosureOptions& opt);

}  // namespace pencilscope
