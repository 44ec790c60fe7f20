#include "pencilscope/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pencilscope/errors.hpp"

namespace pencilscope {

namespace {

LuFactors factor_at(const Pencil& p, Complex lambda, CMatrix* m_out = nullptr) {
    CMatrix m = p.at(lambda);
    LuFactors lu = lu_factor(m);
    if (m_out) *m_out = std::move(m);
    return lu;
}

// log r_n(λ) (natural log) or nothing at the spectrum.
bool log_pseudo_norm(const Pencil& p, Complex lambda, unsigned n, double& out) {
    if (n > kMaxLevel) throw InvalidArgument("level n exceeds cap " + std::to_string(kMaxLevel));
    CMatrix m;
    const LuFactors lu = factor_at(p, lambda, &m);
    if (lu.singular) return false;
    if (n == 0) {
        const double smin = extreme_singular_values(m).sigma_min;
        if (smin == 0.0) return false;
        out = -std::log(smin);
        return true;
    }
    const CMatrix r = lu_solve(lu, CMatrix::identity(p.dim()));
    out = scaled_square_power(r, n) / std::ldexp(1.0, static_cast<int>(n));
    return true;
}

}  // namespace

Pencil::Pencil(CMatrix a, CMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (!a_.is_square() || !b_.is_square() || a_.rows() != b_.rows() || a_.rows() == 0) {
        throw InvalidArgument("pencil needs square A and B of equal positive dimension");
    }
    if (!all_finite(a_) || !all_finite(b_)) throw InvalidArgument("pencil entries must be finite");
}

CMatrix resolvent_matrix(const Pencil& p, Complex lambda) {
    const LuFactors lu = factor_at(p, lambda);
    if (lu.singular) throw AtSpectrum("lambB - A is singular at the requested point");
    return lu_solve(lu, CMatrix::identity(p.dim()));
}

ExtendedReal pseudo_resolvent_norm(const Pencil& p, Complex lambda, unsigned n) {
    double lg;
    if (!log_pseudo_norm(p, lambda, n, lg)) return ExtendedReal::infinity();
    return ExtendedReal(std::exp(lg));
}

ExtendedReal log10_pseudo_resolvent_norm(const Pencil& p, Complex lambda, unsigned n) {
    double lg;
    if (!log_pseudo_norm(p, lambda, n, lg)) return ExtendedReal::infinity();
    return ExtendedReal(lg / std::numbers::ln10);
}

CMatrix resolvent_derivative(const Pencil& p, Complex lambda) {
    const CMatrix r = resolvent_matrix(p, lambda);
    return -(r * p.b() * r);
}

double neumann_radius(const Pencil& p, Complex lambda0) {
    const double k = spectral_norm(p.b() * resolvent_matrix(p, lambda0));
    return k == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / k;
}

CMatrix neumann_series_resolvent(const Pencil& p, Complex lambda0, Complex lambda, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    const CMatrix r0 = resolvent_matrix(p, lambda0);
    const CMatrix k = p.b() * r0;
    const double knorm = spectral_norm(k);
    const double q = std::abs(lambda - lambda0) * knorm;
    if (q >= 1.0) throw OutsideRadius("|lambda - lambda0| is outside the series radius");
    const CMatrix step = (-(lambda - lambda0)) * k;
    const double r0norm = spectral_norm(r0);
    CMatrix sum = r0;
    CMatrix term = r0;
    for (int m = 1; m < 100000; ++m) {
        term = term * step;
        sum += term;
        const double tail = r0norm * std::pow(q, m + 1) / (1.0 - q);
        if (frobenius_norm(term) < tol && tail < tol) break;
        if (q == 0.0) break;
    }
    return sum;
}

Witness perturbation_witness(const Pencil& p, Complex lambda, unsigned n) {
    if (n > kMaxLevel) throw InvalidArgument("level n exceeds cap " + std::to_string(kMaxLevel));
    CMatrix m;
    const LuFactors lu = factor_at(p, lambda, &m);
    if (lu.singular) throw AtSpectrum("lambB - A is singular at the requested point");
    const CMatrix r = lu_solve(lu, CMatrix::identity(p.dim()));
    const ScaledPower sp = scaled_square_power_full(r, n);
    // Top right singular vector of R^{2ⁿ} (scaling does not move it).
    const JacobiSvd svd = jacobi_svd(sp.scaled);
    std::vector<Complex> x = svd.right.column_values(0);
    const std::size_t reps = std::size_t{1} << n;
    std::vector<Complex> v = x;
    for (std::size_t k = 0; k < reps; ++k) v = lu_solve(lu, v);
    const double vnorm = vector_norm(v);
    if (!std::isfinite(vnorm) || vnorm == 0.0) throw Overflow("witness vector norm not representable");

    Witness w;
    w.u = v;
    for (auto& z : w.u) z /= vnorm;
    std::vector<Complex> target = x;
    for (auto& z : target) z /= vnorm;
    // E = target·uᴴ, so E·u = target and ‖E‖ = ‖target‖ = 1/‖v‖.
    w.e = CMatrix(p.dim(), p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) w.e(i, j) = target[i] * std::conj(w.u[j]);
    w.e_norm = vector_norm(target);
    std::vector<Complex> mu = w.u;
    for (std::size_t k = 0; k < reps; ++k) mu = multiply(m, mu);
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] -= target[i];
    w.defect = vector_norm(mu);
    return w;
}

void sort_complex(std::vector<Complex>& z) {
    std::sort(z.begin(), z.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

std::vector<Complex> eigenvalues(const Pencil& p) {
    const LuFactors lu = lu_factor(p.b());
    if (lu.singular) throw SingularB("B is singular; use grid-based localization");
    std::vector<Complex> eig = eigenvalues_general(lu_solve(lu, p.a()));
    sort_complex(eig);
    return eig;
}

Complex refine_eigenvalue(const Pencil& p, Complex seed, int max_iter) {
    const std::size_t n = p.dim();
    std::vector<Complex> x(n, Complex(1.0 / std::sqrt(static_cast<double>(n))));
    for (std::size_t i = 0; i < n; ++i) x[i] *= Complex(1.0, 0.1 * static_cast<double>(i));
    Complex mu = seed;
    for (int it = 0; it < max_iter; ++it) {
        const LuFactors lu = factor_at(p, mu);
        if (lu.singular) return mu;
        std::vector<Complex> y = lu_solve(lu, multiply(p.b(), x));
        const double ny = vector_norm(y);
        if (!(ny > 0.0) || !std::isfinite(ny)) return mu;
        for (auto& z : y) z /= ny;
        x = std::move(y);
        const std::vector<Complex> bx = multiply(p.b(), x), ax = multiply(p.a(), x);
        const double bb = std::norm(vector_norm(bx));
        if (bb == 0.0) return mu;
        const Complex next = dot(bx, ax) / bb;
        const bool done = std::abs(next - mu) <= 1e-14 * (1.0 + std::abs(next));
        mu = next;
        if (done) break;
    }
    return mu;
}

}  // namespace pencilscope
