#include "pencilscope/blockpencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pencilscope/errors.hpp"
#include "pencilscope/linalg.hpp"
#include "pencilscope/parallel.hpp"
#include "pencilscope/pseudogrid.hpp"

namespace pencilscope {

namespace {

// Numerical-rank threshold for the Schur block, relative to ‖λB−A‖_F.
constexpr double kSchurRankTol = 1e-10;

struct Blocks {
    CMatrix p1, p2, p3, p4;  // λB_i − A_i
};

Blocks blocks_at(const BlockPencil& bp, Complex lambda) {
    return {pencil_at(bp.a1, bp.b1, lambda), pencil_at(bp.a2, bp.b2, lambda), pencil_at(bp.a3, bp.b3, lambda),
            pencil_at(bp.a4, bp.b4, lambda)};
}

CMatrix pivot_inverse(const CMatrix& piv) {
    const LuFactors lu = lu_factor(piv);
    if (lu.singular) throw AtPivotSpectrum("pivot block is singular at lambda");
    return lu_solve(lu, CMatrix::identity(piv.rows()));
}

CMatrix block2x2(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
    const std::size_t m = a.rows();
    CMatrix out(2 * m, 2 * m);
    out.set_block(0, 0, a);
    out.set_block(0, m, b);
    out.set_block(m, 0, c);
    out.set_block(m, m, d);
    return out;
}

// λ·pivotB − S(λ), the diagonal block that carries the spectrum.
CMatrix schur_block(const BlockPencil& bp, const SchurData& sd) {
    const CMatrix& b = sd.complement == Complement::first ? bp.b1 : bp.b4;
    return pencil_at(sd.s, b, sd.lambda);
}

double softplus(double x) {
    if (x == -std::numeric_limits<double>::infinity()) return 0.0;
    return x > 30.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

bool close(const CMatrix& x, const CMatrix& y, double tol) {
    const double scale = std::max({frobenius_norm(x), frobenius_norm(y)});
    return frobenius_norm(x - y) <= tol * scale;
}

bool product_zero(const CMatrix& x, const CMatrix& y, double tol) {
    return frobenius_norm(x * y) <= tol * frobenius_norm(x) * frobenius_norm(y);
}

}  // namespace

void BlockPencil::validate() const {
    const std::size_t m = a1.rows();
    if (m == 0) throw InvalidArgument("block pencil needs non-empty blocks");
    for (const CMatrix* x : {&a1, &a2, &a3, &a4, &b1, &b2, &b3, &b4}) {
        if (x->rows() != m || x->cols() != m) throw InvalidArgument("block pencil blocks must all be m x m");
    }
}

Pencil assemble(const BlockPencil& bp) {
    bp.validate();
    return Pencil(block2x2(bp.a1, bp.a2, bp.a3, bp.a4), block2x2(bp.b1, bp.b2, bp.b3, bp.b4));
}

std::string to_string(Complement c) {
    return c == Complement::first ? "first" : "second";
}

Complement parse_complement(const std::string& s) {
    if (s == "first") return Complement::first;
    if (s == "second") return Complement::second;
    throw InvalidArgument("complement must be 'first' or 'second', got '" + s + "'");
}

SchurData schur_complement(const BlockPencil& bp, Complex lambda, Complement c) {
    bp.validate();
    const Blocks p = blocks_at(bp, lambda);
    SchurData sd;
    sd.complement = c;
    sd.lambda = lambda;
    if (c == Complement::first) {
        sd.pivot_inverse = pivot_inverse(p.p4);
        sd.f = p.p2 * sd.pivot_inverse;
        sd.g = sd.pivot_inverse * p.p3;
        sd.s = bp.a1 + sd.f * p.p3;
    } else {
        sd.pivot_inverse = pivot_inverse(p.p1);
        sd.f = p.p3 * sd.pivot_inverse;
        sd.g = sd.pivot_inverse * p.p2;
        sd.s = bp.a4 + sd.f * p.p2;
    }
    return sd;
}

Pencil pivot_pencil(const BlockPencil& bp, Complement c) {
    return c == Complement::first ? Pencil(bp.a4, bp.b4) : Pencil(bp.a1, bp.b1);
}

Pencil schur_pencil(const BlockPencil& bp, const SchurData& sd) {
    return Pencil(sd.s, sd.complement == Complement::first ? bp.b1 : bp.b4);
}

double factorization_residual(const BlockPencil& bp, Complex lambda, Complement c) {
    const SchurData sd = schur_complement(bp, lambda, c);
    const std::size_t m = bp.block_size();
    const CMatrix id = CMatrix::identity(m), zero(m, m);
    const CMatrix sigma = schur_block(bp, sd);
    const Blocks p = blocks_at(bp, lambda);
    CMatrix prod;
    if (c == Complement::first) {
        prod = block2x2(id, sd.f, zero, id) * block2x2(sigma, zero, zero, p.p4) * block2x2(id, zero, sd.g, id);
    } else {
        prod = block2x2(id, zero, sd.f, id) * block2x2(p.p1, zero, zero, sigma) * block2x2(id, sd.g, zero, id);
    }
    const CMatrix full = assemble(bp).at(lambda);
    const double scale = frobenius_norm(full);
    const double diff = frobenius_norm(prod - full);
    return scale == 0.0 ? diff : diff / scale;
}

CMatrix resolvent_via_schur(const BlockPencil& bp, Complex lambda, Complement c) {
    const SchurData sd = schur_complement(bp, lambda, c);
    const CMatrix sigma = schur_block(bp, sd);
    const double scale = frobenius_norm(assemble(bp).at(lambda));
    const LuFactors lu = lu_factor(sigma);
    if (lu.singular || extreme_singular_values(sigma).sigma_min <= kSchurRankTol * scale) {
        throw SchurSingular("Schur complement pencil is singular at lambda");
    }
    const CMatrix si = lu_solve(lu, CMatrix::identity(sigma.rows()));
    if (c == Complement::first) {
        const CMatrix sf = si * sd.f;
        const CMatrix gs = sd.g * si;
        return block2x2(si, -sf, -gs, gs * sd.f + sd.pivot_inverse);
    }
    const CMatrix sf = si * sd.f;
    const CMatrix gs = sd.g * si;
    return block2x2(sd.pivot_inverse + gs * sd.f, -gs, -sf, si);
}

double spectral_indicator(const BlockPencil& bp, Complex lambda) {
    bp.validate();
    const Blocks p = blocks_at(bp, lambda);
    const CMatrix p1i = pivot_inverse(p.p1);
    const CMatrix p4i = pivot_inverse(p.p4);
    const CMatrix m_s1 = p.p2 * p4i * p.p3 * p1i;
    const CMatrix n_s1 = p1i * p.p2 * p4i * p.p3;
    const CMatrix m_s2 = p.p3 * p1i * p.p2 * p4i;
    const CMatrix n_s2 = p4i * p.p3 * p1i * p.p2;
    return std::min({spectral_norm(m_s1), spectral_norm(n_s1), spectral_norm(m_s2), spectral_norm(n_s2)});
}

double inflation_factor(double delta1, double delta2, unsigned n) {
    const double k = std::ldexp(1.0, static_cast<int>(n));
    const double l = softplus(k * std::log(delta1)) + softplus(k * std::log(delta2));
    return std::exp(l / k);
}

double corrected_inflation_factor(double delta1, double delta2, unsigned n) {
    const double k = std::ldexp(1.0, static_cast<int>(n));
    return std::exp((std::log1p(k * delta1) + std::log1p(k * delta2)) / k);
}

EnclosureFactors enclosure_factors(const BlockPencil& bp, Complex lambda, Complement c, unsigned n) {
    if (n > kMaxLevel) throw InvalidArgument("level n exceeds cap " + std::to_string(kMaxLevel));
    const SchurData sd = schur_complement(bp, lambda, c);
    EnclosureFactors ef;
    ef.n = n;
    ef.delta1 = spectral_norm(sd.g);
    ef.delta2 = spectral_norm(sd.f);
    ef.inflation = inflation_factor(ef.delta1, ef.delta2, n);
    ef.corrected_inflation = corrected_inflation_factor(ef.delta1, ef.delta2, n);
    return ef;
}

HypothesisReport verify_hypotheses(const BlockPencil& bp, Complex lambda, Complement c, double tol) {
    const SchurData sd = schur_complement(bp, lambda, c);
    HypothesisReport r;
    r.gf_zero = product_zero(sd.g, sd.f, tol);
    r.fg_zero = product_zero(sd.f, sd.g, tol);
    const LuFactors lu = lu_factor(schur_block(bp, sd));
    if (lu.singular) return r;
    const CMatrix si = lu_solve(lu, CMatrix::identity(bp.block_size()));
    if (c == Complement::second) {
        r.g_intertwines = close(sd.g * si, sd.pivot_inverse * sd.g, tol);
        r.f_intertwines = close(sd.f * sd.pivot_inverse, si * sd.f, tol);
    } else {
        r.g_intertwines = close(sd.pivot_inverse * sd.g, sd.g * si, tol);
        r.f_intertwines = close(si * sd.f, sd.f * sd.pivot_inverse, tol);
    }
    return r;
}

EnclosureSweep enclosure_sweep(const BlockPencil& bp, const GridSpec& g, std::span<const double> epsilons,
                               const EnclosureOptions& opt) {
    g.validate();
    const Pencil full = assemble(bp);
    const Pencil piv = pivot_pencil(bp, opt.complement);
    struct Sample {
        ExtendedReal full, pivot, schur;
        double d1 = 0, d2 = 0;
        bool skipped = false;
    };
    std::vector<Sample> samples(g.size());
    parallel_for(g.size(), [&](std::size_t k) {
        const Complex z = g.point(k);
        Sample& s = samples[k];
        SchurData sd;
        try {
            sd = schur_complement(bp, z, opt.complement);
        } catch (const AtPivotSpectrum&) {
            s.skipped = true;
            return;
        }
        s.full = log10_pseudo_resolvent_norm(full, z, opt.n);
        s.pivot = log10_pseudo_resolvent_norm(piv, z, opt.n);
        s.schur = log10_pseudo_resolvent_norm(schur_pencil(bp, sd), z, opt.n);
        s.d1 = spectral_norm(sd.g);
        s.d2 = spectral_norm(sd.f);
    });

    EnclosureSweep out;
    out.epsilons.assign(epsilons.begin(), epsilons.end());
    out.points = g.size();
    for (const Sample& s : samples) {
        if (s.skipped) {
            ++out.skipped;
            continue;
        }
        out.sup_delta1 = std::max(out.sup_delta1, s.d1);
        out.sup_delta2 = std::max(out.sup_delta2, s.d2);
    }
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const Sample& s = samples[k];
        if (s.skipped) continue;
        const double d1 = opt.sup_radius ? out.sup_delta1 : s.d1;
        const double d2 = opt.sup_radius ? out.sup_delta2 : s.d2;
        const double infl = opt.rule == InflationRule::stated ? inflation_factor(d1, d2, opt.n)
                                                              : corrected_inflation_factor(d1, d2, opt.n);
        for (double eps : epsilons) {
            const double level = -std::log10(eps);
            if (s.full < ExtendedReal(level)) continue;
            ++out.in_set;
            // rounding slack only
            const ExtendedReal need(level - std::log10(infl) - 1e-12);
            if (s.pivot >= need || s.schur >= need) continue;
            ++out.violations;
            if (out.failures.size() < 50) {
                EnclosurePoint p;
                p.lambda = g.point(k);
                p.epsilon = eps;
                p.full_infinite = s.full.is_infinite();
                p.full = s.full.value_or(0.0);
                p.pivot = s.pivot.value_or(0.0);
                p.schur = s.schur.value_or(0.0);
                p.delta1 = d1;
                p.delta2 = d2;
                p.inflation = infl;
                p.violated = true;
                out.failures.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace pencilscope
