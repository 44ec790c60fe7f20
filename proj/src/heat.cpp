#include "pencilscope/heat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pencilscope/errors.hpp"
#include "pencilscope/linalg.hpp"
#include "pencilscope/parallel.hpp"
#include "pencilscope/pseudogrid.hpp"

namespace pencilscope {

namespace {

void require_m(std::size_t m, std::size_t min) {
    if (m < min) throw InvalidArgument("grid intervals m must be at least " + std::to_string(min));
}

// Composite rule on nodes lo..hi (inclusive) of spacing h.
Complex integrate(std::span<const Complex> g, std::size_t lo, std::size_t hi, double h, Quadrature q) {
    const std::size_t k = hi - lo;
    if (k == 0) return 0.0;
    if (q == Quadrature::trapezoid || k == 1) {
        Complex s = 0.5 * (g[lo] + g[hi]);
        for (std::size_t i = lo + 1; i < hi; ++i) s += g[i];
        return h * s;
    }
    auto simpson = [&](std::size_t a, std::size_t b) {
        Complex s = g[a] + g[b];
        for (std::size_t i = a + 1; i < b; ++i) s += (((i - a) % 2) ? 4.0 : 2.0) * g[i];
        return h / 3.0 * s;
    };
    if (k % 2 == 0) return simpson(lo, hi);
    // odd interval count: Simpson up to hi−3, then the 3/8 rule
    const Complex tail = 3.0 * h / 8.0 * (g[hi - 3] + 3.0 * g[hi - 2] + 3.0 * g[hi - 1] + g[hi]);
    return (k > 3 ? simpson(lo, hi - 3) : Complex{}) + tail;
}

double delta1_from(const CMatrix& c2d2, const CMatrix& d1, Complex lambda) {
    const CMatrix id = CMatrix::identity(d1.rows());
    const LuFactors lu = lu_factor(lambda * id - c2d2);
    if (lu.singular) throw AtPivotSpectrum("lambda is an eigenvalue of c^2 D2");
    return std::abs(lambda) * spectral_norm(d1 * lu_solve(lu, id));
}

}  // namespace

void HeatParams::validate() const {
    if (!(c > 0.0) || !(d > 0.0) || !std::isfinite(c) || !std::isfinite(d)) {
        throw InvalidArgument("heat parameters need c > 0 and d > 0");
    }
}

std::vector<double> heat_eigenvalues(const HeatParams& hp, std::size_t count) {
    hp.validate();
    std::vector<double> out(count);
    const double k = std::numbers::pi / hp.d;
    for (std::size_t n = 0; n < count; ++n) {
        const double w = (static_cast<double>(n) + 0.5) * k;
        out[n] = -hp.c * hp.c * w * w;
    }
    return out;
}

EigenSamples heat_eigenfunction(const HeatParams& hp, std::size_t n, std::span<const double> xs) {
    EigenSamples out;
    out.lambda = heat_eigenvalues(hp, n + 1).back();
    const Complex root = std::sqrt(Complex(out.lambda, 0.0));
    for (double x : xs) {
        if (x < 0.0 || x > hp.d) throw InvalidArgument("eigenfunction sample outside [0, d]");
        const Complex arg = root * x / hp.c;
        out.psi1.push_back(std::sinh(arg));
        out.psi2.push_back(root / hp.c * std::cosh(arg));
    }
    return out;
}

std::vector<double> heat_nodes(const HeatParams& hp, std::size_t m) {
    hp.validate();
    require_m(m, 1);
    std::vector<double> x(m + 1);
    for (std::size_t i = 0; i <= m; ++i) x[i] = i == m ? hp.d : hp.d * static_cast<double>(i) / static_cast<double>(m);
    return x;
}

CMatrix heat_second_difference(const HeatParams& hp, std::size_t m) {
    hp.validate();
    require_m(m, 3);
    const double h = hp.d / static_cast<double>(m);
    const double s = 1.0 / (h * h);
    CMatrix d2(m + 1, m + 1);
    for (std::size_t i = 1; i < m; ++i) {
        if (i > 1) d2(i, i - 1) = s;
        d2(i, i) = -2.0 * s;
        d2(i, i + 1) = s;
    }
    d2(m, m - 1) = 2.0 * s;
    d2(m, m) = -2.0 * s;
    return d2;
}

CMatrix heat_first_difference(const HeatParams& hp, std::size_t m) {
    hp.validate();
    require_m(m, 2);
    const double h = hp.d / static_cast<double>(m);
    CMatrix d1(m + 1, m + 1);
    d1(0, 1) = 1.0 / h;
    for (std::size_t i = 1; i < m; ++i) {
        if (i > 1) d1(i, i - 1) = -0.5 / h;
        d1(i, i + 1) = 0.5 / h;
    }
    d1(m, m - 1) = -1.0 / h;
    d1(m, m) = 1.0 / h;
    return d1;
}

BlockPencil heat_pencil_matrices(const HeatParams& hp, std::size_t m) {
    const std::size_t n = m + 1;
    const CMatrix zero(n, n);
    BlockPencil bp;
    bp.a1 = (hp.c * hp.c) * heat_second_difference(hp, m);
    bp.a2 = zero;
    bp.a3 = zero;
    bp.a4 = zero;
    bp.b1 = CMatrix::identity(n);
    bp.b2 = zero;
    bp.b3 = heat_first_difference(hp, m);
    bp.b4 = -CMatrix::identity(n);
    return bp;
}

GreenResult green_resolvent_apply(const HeatParams& hp, Complex lambda, std::span<const Complex> f, Quadrature q) {
    hp.validate();
    if (lambda == Complex{}) throw InvalidArgument("Green resolvent needs lambda != 0");
    if (f.size() < 2) throw InvalidArgument("need at least two samples of f");
    const std::size_t m = f.size() - 1;
    const double h = hp.d / static_cast<double>(m);
    const Complex root = std::sqrt(lambda);
    const Complex s = root / hp.c;
    const Complex pref = 1.0 / (hp.c * root);
    GreenResult out;
    out.branch_cut = lambda.imag() == 0.0 && lambda.real() < 0.0;
    out.u.resize(m + 1);
    std::vector<Complex> g(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        const double x = h * static_cast<double>(i);
        for (std::size_t j = i; j <= m; ++j) g[j] = std::sinh(s * (x - h * static_cast<double>(j))) * f[j];
        if (q == Quadrature::simpson && i + 1 == m && i > 0) {
            // single interval: quadratic through t_{m-2}, trapezoid would be O(h^3) here
            const Complex gl = std::sinh(s * h) * f[i - 1];
            out.u[i] = pref * h / 12.0 * (-gl + 8.0 * g[i] + 5.0 * g[m]);
            continue;
        }
        out.u[i] = pref * integrate(g, i, m, h, q);
    }
    out.quadrature = q == Quadrature::trapezoid ? "trapezoid"
                                                : "simpson (3/8 rule on odd interval counts, 3-point rule on the last interval)";
    return out;
}

Delta1 enclosure_delta1(const HeatParams& hp, std::size_t m, Complex lambda) {
    const CMatrix d2 = heat_second_difference(hp, m);
    const CMatrix d1 = heat_first_difference(hp, m);
    const std::size_t n = m + 1;
    const CMatrix id = CMatrix::identity(n);
    const double c2 = hp.c * hp.c;
    Delta1 out;
    out.delta1 = delta1_from(c2 * d2, d1, lambda);

    const LuFactors lu_sq = lu_factor(lambda * id - c2 * (d1 * d1));
    if (lu_sq.singular) throw AtPivotSpectrum("lambda is an eigenvalue of c^2 D1^2");
    out.direct = std::abs(lambda) * spectral_norm(d1 * lu_solve(lu_sq, id));

    const Complex root = std::sqrt(lambda);
    const LuFactors minus = lu_factor(root * id - hp.c * d1);
    const LuFactors plus = lu_factor(root * id + hp.c * d1);
    if (minus.singular || plus.singular) throw AtPivotSpectrum("sqrt(lambda) is an eigenvalue of c D1");
    const CMatrix split = (lambda / (2.0 * hp.c)) * (lu_solve(minus, id) - lu_solve(plus, id));
    out.split = spectral_norm(split);
    return out;
}

FtcsParams FtcsParams::from_a(const HeatParams& hp, std::size_t m, double a) {
    hp.validate();
    require_m(m, 2);
    FtcsParams fp;
    fp.m = m;
    fp.dx = hp.d / static_cast<double>(m);
    fp.a = a;
    fp.dt = a * fp.dx * fp.dx / (hp.c * hp.c);
    return fp;
}

FtcsParams FtcsParams::from_dt(const HeatParams& hp, std::size_t m, double dt) {
    hp.validate();
    require_m(m, 2);
    if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
    FtcsParams fp;
    fp.m = m;
    fp.dx = hp.d / static_cast<double>(m);
    fp.dt = dt;
    fp.a = hp.c * hp.c * dt / (fp.dx * fp.dx);
    return fp;
}

CMatrix ftcs_matrix(const FtcsParams& fp) {
    require_m(fp.m, 2);
    const std::size_t m = fp.m;
    CMatrix t(m + 1, m + 1);
    t(0, 0) = 1.0;
    for (std::size_t i = 1; i < m; ++i) {
        t(i, i - 1) = fp.a;
        t(i, i) = 1.0 - 2.0 * fp.a;
        t(i, i + 1) = fp.a;
    }
    t(m, m - 1) = -1.0;
    t(m, m) = 1.0;
    return t;
}

FtcsRun simulate_ftcs(const FtcsParams& fp, std::span<const double> initial, std::size_t steps) {
    require_m(fp.m, 2);
    const std::size_t m = fp.m;
    if (initial.size() != m + 1) throw GridMismatch("initial state needs m+1 samples");
    if (initial[0] != 0.0) throw InvalidArgument("initial state must vanish at x = 0");
    FtcsRun run;
    run.unstable = fp.a > 0.5;
    run.states.reserve(steps + 1);
    run.states.emplace_back(initial.begin(), initial.end());
    std::vector<double> next(m + 1);
    for (std::size_t s = 0; s < steps; ++s) {
        const std::vector<double>& cur = run.states.back();
        for (std::size_t i = 1; i < m; ++i) next[i] = cur[i] + fp.a * (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]);
        next[0] = 0.0;
        next[m] = next[m - 1];
        run.states.push_back(next);
    }
    return run;
}

double trapezoid_norm(std::span<const double> xs, std::span<const Complex> v) {
    if (xs.size() != v.size() || xs.size() < 2) throw GridMismatch("norm needs matching samples");
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        s += 0.5 * (xs[i + 1] - xs[i]) * (std::norm(v[i]) + std::norm(v[i + 1]));
    return std::sqrt(s);
}

FoldResult fold_isometry(std::span<const double> xs, std::span<const Complex> v1, std::span<const Complex> v2) {
    if (xs.size() < 2 || v1.size() != xs.size() || v2.size() != xs.size()) {
        throw GridMismatch("v1, v2 and the grid must have the same number of samples");
    }
    const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (std::abs(xs[i] - xs[i - 1] - h) > 1e-9 * std::abs(h)) throw GridMismatch("grid is not uniform");
    }
    const double r = 1.0 / std::numbers::sqrt2;
    FoldResult out;
    const std::size_t n = xs.size();
    for (std::size_t k = n; k-- > 0;) {
        out.x_left.push_back(-xs[k]);
        out.left.push_back(r * (-v1[k] + v2[k]));
    }
    for (std::size_t k = 0; k < n; ++k) {
        out.x_right.push_back(xs[k]);
        out.right.push_back(r * (v1[k] + v2[k]));
    }
    return out;
}

HeatEnclosureReport heat_enclosure_check(const HeatParams& hp, std::size_t m, const GridSpec& g,
                                         std::span<const double> epsilons, bool sup_radius) {
    g.validate();
    const BlockPencil bp = heat_pencil_matrices(hp, m);
    const Pencil full = assemble(bp);
    const CMatrix& c2d2 = bp.a1;
    const CMatrix& d1 = bp.b3;
    HeatEnclosureReport rep;
    rep.spectrum = eigenvalues_general(bp.a1);
    sort_complex(rep.spectrum);
    rep.points = g.size();

    struct Sample {
        ExtendedReal r;
        double delta1 = 0.0, dist = 0.0;
        bool skipped = false;
    };
    std::vector<Sample> samples(g.size());
    const double max_eps = epsilons.empty() ? 0.0 : *std::max_element(epsilons.begin(), epsilons.end());
    parallel_for(g.size(), [&](std::size_t k) {
        const Complex z = g.point(k);
        Sample& s = samples[k];
        s.r = log10_pseudo_resolvent_norm(full, z, 0);
        s.dist = std::numeric_limits<double>::infinity();
        for (Complex mu : rep.spectrum) s.dist = std::min(s.dist, std::abs(z - mu));
        // δ₁ only matters where the point can enter the set
        if (!sup_radius && s.r < ExtendedReal(-std::log10(max_eps))) return;
        try {
            s.delta1 = delta1_from(c2d2, d1, z);
        } catch (const AtPivotSpectrum&) {
            s.skipped = true;
        }
    });
    for (const Sample& s : samples) {
        if (s.skipped) ++rep.skipped;
        else rep.sup_delta1 = std::max(rep.sup_delta1, s.delta1);
    }
    for (const Sample& s : samples) {
        if (s.skipped) continue;
        const double d1 = sup_radius ? rep.sup_delta1 : s.delta1;
        for (double eps : epsilons) {
            if (s.r < ExtendedReal(-std::log10(eps))) continue;
            ++rep.in_set;
            const double ratio = s.dist / (eps * (1.0 + d1));
            rep.worst_ratio = std::max(rep.worst_ratio, ratio);
            if (ratio > 1.0) ++rep.violations;
        }
    }
    return rep;
}

}  // namespace pencilscope
