#include "pencilscope/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>

#include "pencilscope/errors.hpp"

namespace pencilscope {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Hermitian Householder reflector P = I − tau·v·vᴴ with P·x = beta·e₁.
struct Reflector {
    std::vector<Complex> v;
    double tau = 0.0;
    Complex beta;
};

Reflector make_reflector(std::vector<Complex> x) {
    Reflector h;
    const double xnorm = vector_norm(x);
    if (xnorm == 0.0) {
        h.v = std::move(x);
        return h;
    }
    const Complex alpha = x[0];
    const double mag = std::abs(alpha);
    const Complex phase = mag == 0.0 ? Complex(1.0) : alpha / mag;
    h.beta = -phase * xnorm;
    x[0] -= h.beta;
    // vᴴv = 2‖x‖(‖x‖ + |α|)
    h.tau = 1.0 / (xnorm * (xnorm + mag));
    h.v = std::move(x);
    return h;
}

// Sturm count: eigenvalues of the zero-diagonal tridiagonal with off-diagonal
// b that lie strictly below x.
std::size_t sturm_count(const std::vector<double>& b2, double x, double pivmin) {
    std::size_t count = 0;
    double q = -x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (double bb : b2) {
        q = -x - bb / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

// Reduce to real upper bidiagonal (diag d, super e); rows >= cols assumed.
void bidiagonalize(CMatrix w, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t r = w.rows(), c = w.cols();
    d.assign(c, 0.0);
    e.assign(c > 0 ? c - 1 : 0, 0.0);
    std::vector<Complex> acc(c);
    for (std::size_t k = 0; k < c; ++k) {
        std::vector<Complex> x(r - k);
        for (std::size_t i = k; i < r; ++i) x[i - k] = w(i, k);
        Reflector h = make_reflector(std::move(x));
        d[k] = std::abs(h.beta);
        if (h.tau != 0.0 && k + 1 < c) {
            std::fill(acc.begin() + k + 1, acc.end(), Complex{});
            for (std::size_t i = k; i < r; ++i) {
                const Complex vi = std::conj(h.v[i - k]);
                const Complex* wi = w.row_ptr(i);
                for (std::size_t j = k + 1; j < c; ++j) acc[j] += vi * wi[j];
            }
            for (std::size_t i = k; i < r; ++i) {
                const Complex f = h.tau * h.v[i - k];
                Complex* wi = w.row_ptr(i);
                for (std::size_t j = k + 1; j < c; ++j) wi[j] -= f * acc[j];
            }
        }
        if (k + 2 > c) continue;
        std::vector<Complex> y(c - k - 1);
        for (std::size_t j = k + 1; j < c; ++j) y[j - k - 1] = std::conj(w(k, j));
        Reflector g = make_reflector(std::move(y));
        e[k] = std::abs(g.beta);
        if (g.tau == 0.0) continue;
        for (std::size_t i = k + 1; i < r; ++i) {
            Complex* wi = w.row_ptr(i);
            Complex s{};
            for (std::size_t j = k + 1; j < c; ++j) s += wi[j] * g.v[j - k - 1];
            s *= g.tau;
            for (std::size_t j = k + 1; j < c; ++j) wi[j] -= s * std::conj(g.v[j - k - 1]);
        }
    }
}

struct GolubKahan {
    std::vector<double> b2;
    std::size_t n = 0;
    double bound = 0.0;
    double pivmin = 0.0;
};

GolubKahan golub_kahan(const CMatrix& m) {
    std::vector<double> d, e;
    if (m.rows() >= m.cols()) bidiagonalize(m, d, e);
    else bidiagonalize(m.adjoint(), d, e);
    GolubKahan gk;
    gk.n = d.size();
    double bmax = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        gk.b2.push_back(d[k] * d[k]);
        bmax = std::max(bmax, d[k]);
        if (k < e.size()) {
            gk.b2.push_back(e[k] * e[k]);
            bmax = std::max(bmax, e[k]);
        }
    }
    gk.bound = 2.0 * bmax;
    gk.pivmin = DBL_MIN * std::max(1.0, bmax * bmax);
    return gk;
}

// k-th smallest singular value (1-based) by bisection.
double kth_singular_value(const GolubKahan& gk, std::size_t k) {
    if (gk.bound == 0.0) return 0.0;
    const std::size_t target = gk.n + k;
    double lo = 0.0, hi = gk.bound * (1.0 + 4 * kEps);
    const double floor = gk.bound * 1e-290;
    while (hi - lo > 2.0 * kEps * hi && hi > floor) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(gk.b2, mid, gk.pivmin) >= target) hi = mid;
        else lo = mid;
    }
    if (hi <= floor) return 0.0;
    return 0.5 * (lo + hi);
}

}  // namespace

LuFactors lu_factor(const CMatrix& m) {
    if (!m.is_square()) throw InvalidArgument("lu_factor needs a square matrix");
    const std::size_t n = m.rows();
    LuFactors f;
    f.lower_upper = m;
    f.permutation.resize(n);
    std::iota(f.permutation.begin(), f.permutation.end(), std::size_t{0});
    f.pivot_floor = kPivotFloor * max_abs_entry(m);
    CMatrix& lu = f.lower_upper;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) best = v, p = i;
        }
        if (best <= f.pivot_floor || best == 0.0) {
            f.singular = true;
            return f;
        }
        if (p != k) {
            std::swap_ranges(lu.row_ptr(k), lu.row_ptr(k) + n, lu.row_ptr(p));
            std::swap(f.permutation[k], f.permutation[p]);
        }
        const Complex inv = 1.0 / lu(k, k);
        const Complex* rk = lu.row_ptr(k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex* ri = lu.row_ptr(i);
            const Complex l = ri[k] * inv;
            ri[k] = l;
            if (l == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
        }
    }
    return f;
}

CMatrix lu_solve(const LuFactors& lu, const CMatrix& rhs) {
    if (lu.singular) throw SingularMatrix("matrix is singular to working precision");
    const CMatrix& f = lu.lower_upper;
    const std::size_t n = f.rows(), k = rhs.cols();
    if (rhs.rows() != n) throw InvalidArgument("lu_solve: rhs row count mismatch");
    CMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i) std::copy_n(rhs.row_ptr(lu.permutation[i]), k, x.row_ptr(i));
    for (std::size_t i = 0; i < n; ++i) {
        Complex* xi = x.row_ptr(i);
        for (std::size_t j = 0; j < i; ++j) {
            const Complex l = f(i, j);
            if (l == Complex{}) continue;
            const Complex* xj = x.row_ptr(j);
            for (std::size_t c = 0; c < k; ++c) xi[c] -= l * xj[c];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex* xi = x.row_ptr(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex u = f(i, j);
            if (u == Complex{}) continue;
            const Complex* xj = x.row_ptr(j);
            for (std::size_t c = 0; c < k; ++c) xi[c] -= u * xj[c];
        }
        const Complex inv = 1.0 / f(i, i);
        for (std::size_t c = 0; c < k; ++c) xi[c] *= inv;
    }
    return x;
}

CMatrix lu_solve(const CMatrix& m, const CMatrix& rhs) {
    if (!m.is_square()) throw InvalidArgument("lu_solve needs a square matrix");
    return lu_solve(lu_factor(m), rhs);
}

std::vector<Complex> lu_solve(const LuFactors& lu, std::span<const Complex> rhs) {
    CMatrix x = lu_solve(lu, CMatrix::column(rhs));
    return {x.entries().begin(), x.entries().end()};
}

std::vector<Complex> lu_solve_adjoint(const LuFactors& lu, std::span<const Complex> rhs) {
    if (lu.singular) throw SingularMatrix("matrix is singular to working precision");
    // Mᴴ = Uᴴ Lᴴ P, so solve Uᴴ z = rhs, Lᴴ y = z, then x = Pᵀ y.
    const CMatrix& f = lu.lower_upper;
    const std::size_t n = f.rows();
    if (rhs.size() != n) throw InvalidArgument("lu_solve_adjoint: size mismatch");
    std::vector<Complex> z(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = z[i];
        for (std::size_t j = 0; j < i; ++j) s -= std::conj(f(j, i)) * z[j];
        z[i] = s / std::conj(f(i, i));
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = z[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= std::conj(f(j, i)) * z[j];
        z[i] = s;
    }
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) x[lu.permutation[i]] = z[i];
    return x;
}

CMatrix inverse(const CMatrix& m) {
    return lu_solve(m, CMatrix::identity(m.rows()));
}

ExtremeSingularValues extreme_singular_values(const CMatrix& m) {
    if (m.empty()) return {};
    const GolubKahan gk = golub_kahan(m);
    ExtremeSingularValues out;
    out.sigma_max = kth_singular_value(gk, gk.n);
    out.sigma_min = kth_singular_value(gk, 1);
    return out;
}

double spectral_norm(const CMatrix& m) {
    if (m.empty()) return 0.0;
    const GolubKahan gk = golub_kahan(m);
    return kth_singular_value(gk, gk.n);
}

std::vector<double> singular_values(const CMatrix& m) {
    if (m.empty()) return {};
    const GolubKahan gk = golub_kahan(m);
    std::vector<double> s(gk.n);
    for (std::size_t k = 0; k < gk.n; ++k) s[k] = kth_singular_value(gk, gk.n - k);
    return s;
}

JacobiSvd jacobi_svd(const CMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<Complex>> a(c, std::vector<Complex>(r));
    std::vector<std::vector<Complex>> v(c, std::vector<Complex>(c));
    for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t i = 0; i < r; ++i) a[j][i] = m(i, j);
        v[j][j] = 1.0;
    }
    const double tol = kEps * std::max<std::size_t>(r, 1);
    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < c; ++p) {
            for (std::size_t q = p + 1; q < c; ++q) {
                double alpha = 0.0, beta = 0.0;
                for (std::size_t i = 0; i < r; ++i) {
                    alpha += std::norm(a[p][i]);
                    beta += std::norm(a[q][i]);
                }
                const Complex gamma = dot(a[p], a[q]);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                auto rotate = [&](std::vector<Complex>& xp, std::vector<Complex>& xq) {
                    for (std::size_t i = 0; i < xp.size(); ++i) {
                        const Complex ap = xp[i], aq = xq[i];
                        xp[i] = cs * ap - sn * std::conj(phase) * aq;
                        xq[i] = sn * phase * ap + cs * aq;
                    }
                };
                rotate(a[p], a[q]);
                rotate(v[p], v[q]);
            }
        }
        if (!rotated) break;
    }
    std::vector<double> norms(c);
    for (std::size_t j = 0; j < c; ++j) norms[j] = vector_norm(a[j]);
    std::vector<std::size_t> order(c);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });
    JacobiSvd out;
    out.right = CMatrix(c, c);
    for (std::size_t k = 0; k < c; ++k) {
        out.values.push_back(norms[order[k]]);
        for (std::size_t i = 0; i < c; ++i) out.right(i, k) = v[order[k]][i];
    }
    return out;
}

ScaledPower scaled_square_power_full(const CMatrix& x, unsigned n, unsigned cap) {
    if (!x.is_square()) throw InvalidArgument("scaled_square_power needs a square matrix");
    if (n > cap) throw InvalidArgument("level n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (!all_finite(x)) throw Overflow("non-finite entry in power base");
    ScaledPower out;
    CMatrix y = x;
    double s = frobenius_norm(y);
    if (!std::isfinite(s)) throw Overflow("Frobenius norm of power base overflows");
    out.log_scale = std::log(std::max(s, kLogFloor));
    if (s > 0.0) y *= 1.0 / s;
    for (unsigned k = 1; k <= n; ++k) {
        y = y * y;
        s = frobenius_norm(y);
        if (!std::isfinite(s)) throw Overflow("scaled square overflows");
        out.log_scale = 2.0 * out.log_scale + std::log(std::max(s, kLogFloor));
        if (s > 0.0) y *= 1.0 / s;
    }
    out.log_norm = out.log_scale + std::log(std::max(spectral_norm(y), kLogFloor));
    if (!std::isfinite(out.log_norm)) throw Overflow("log-norm of power is not finite");
    out.scaled = std::move(y);
    return out;
}

double scaled_square_power(const CMatrix& x, unsigned n, unsigned cap) {
    return scaled_square_power_full(x, n, cap).log_norm;
}

std::vector<Complex> eigenvalues_general(const CMatrix& m) {
    if (!m.is_square()) throw InvalidArgument("eigenvalues need a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    CMatrix h = m;

    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::vector<Complex> x(n - k - 1);
        for (std::size_t i = k + 1; i < n; ++i) x[i - k - 1] = h(i, k);
        Reflector r = make_reflector(std::move(x));
        if (r.tau == 0.0) continue;
        const auto& v = r.v;
        // left: rows k+1..n−1
        std::vector<Complex> acc(n);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex vi = std::conj(v[i - k - 1]);
            for (std::size_t j = k; j < n; ++j) acc[j] += vi * h(i, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = r.tau * v[i - k - 1];
            for (std::size_t j = k; j < n; ++j) h(i, j) -= f * acc[j];
        }
        // right: cols k+1..n−1
        for (std::size_t i = 0; i < n; ++i) {
            Complex s{};
            for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
            s *= r.tau;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j - k - 1]);
        }
        h(k + 1, k) = r.beta;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }

    const double hnorm = frobenius_norm(h);
    std::vector<Complex> eig;
    eig.reserve(n);
    std::vector<double> cs(n);
    std::vector<Complex> sn(n);
    std::size_t hi = n - 1;
    std::size_t iter = 0;
    const std::size_t max_iter = 60 * n;
    std::size_t total = 0;
    while (true) {
        if (hi == 0) {
            eig.push_back(h(0, 0));
            break;
        }
        std::size_t l = hi;
        while (l > 0) {
            const double sub = std::abs(h(l, l - 1));
            const double diag = std::abs(h(l, l)) + std::abs(h(l - 1, l - 1));
            if (sub <= kEps * diag || sub <= kEps * hnorm) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == hi) {
            eig.push_back(h(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        ++iter;
        if (++total > max_iter) throw Error("QR iteration did not converge");

        Complex mu;
        if (iter % 11 == 0) {
            mu = h(hi, hi) + 1.5 * std::abs(h(hi, hi - 1));
        } else {
            const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
            const Complex tr_half = 0.5 * (a + d);
            const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
            const Complex m1 = tr_half + disc, m2 = tr_half - disc;
            mu = std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
        }

        for (std::size_t k = l; k <= hi; ++k) h(k, k) -= mu;
        for (std::size_t k = l; k < hi; ++k) {
            const Complex a = h(k, k), b = h(k + 1, k);
            const double na = std::abs(a), nb = std::abs(b);
            double c;
            Complex s;
            if (nb == 0.0) {
                c = 1.0, s = 0.0;
            } else if (na == 0.0) {
                c = 0.0, s = std::conj(b) / nb;
            } else {
                const double norm = std::hypot(na, nb);
                c = na / norm;
                s = (a / na) * std::conj(b) / norm;
            }
            cs[k] = c, sn[k] = s;
            for (std::size_t j = k; j <= hi; ++j) {
                const Complex x = h(k, j), y = h(k + 1, j);
                h(k, j) = c * x + s * y;
                h(k + 1, j) = -std::conj(s) * x + c * y;
            }
        }
        for (std::size_t k = l; k < hi; ++k) {
            const double c = cs[k];
            const Complex s = sn[k];
            for (std::size_t i = l; i <= k + 1; ++i) {
                const Complex x = h(i, k), y = h(i, k + 1);
                h(i, k) = x * c + y * std::conj(s);
                h(i, k + 1) = -x * s + y * c;
            }
        }
        for (std::size_t k = l; k <= hi; ++k) h(k, k) += mu;
    }
    return eig;
}

}  // namespace pencilscope
