#include "pencilscope/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace pencilscope {

Rng::Rng(std::uint64_t seed) : eng_(seed) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x9e3779b9u};
    Rng r(0);
    r.eng_.seed(seq);
    return r;
}

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    spare_ = rad * std::sin(th);
    has_spare_ = true;
    return rad * std::cos(th);
}

Complex Rng::complex_normal() {
    const double x = normal();
    const double y = normal();
    return Complex(x, y) / std::numbers::sqrt2;
}

Complex Rng::complex_uniform_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double th = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, th);
}

CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale) {
    CMatrix m(rows, cols);
    for (auto& z : m.entries()) z = scale * rng.complex_normal();
    return m;
}

CMatrix random_unitary(Rng& rng, std::size_t n) {
    CMatrix g = random_matrix(rng, n, n);
    // modified Gram-Schmidt on columns, twice for orthogonality
    std::vector<std::vector<Complex>> q(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> v = g.column_values(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const Complex r = dot(q[k], v);
                for (std::size_t i = 0; i < n; ++i) v[i] -= r * q[k][i];
            }
        }
        const double nv = vector_norm(v);
        for (auto& z : v) z /= nv;
        q[j] = std::move(v);
    }
    CMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = q[j][i];
    return u;
}

Pencil random_pencil(Rng& rng, std::size_t dim) {
    const double s = 1.0 / std::sqrt(static_cast<double>(dim));
    CMatrix a = random_matrix(rng, dim, dim, s);
    CMatrix b = random_matrix(rng, dim, dim, s);
    return Pencil(std::move(a), std::move(b));
}

Pencil random_hermitian_commuting_pencil(Rng& rng, std::size_t dim) {
    const CMatrix u = random_unitary(rng, dim);
    std::vector<Complex> da(dim), db(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        da[k] = rng.uniform(-2.0, 2.0);
        const double mag = rng.uniform(0.5, 2.0);
        db[k] = rng.uniform() < 0.5 ? -mag : mag;
    }
    const CMatrix uh = u.adjoint();
    CMatrix a = u * CMatrix::diagonal(da) * uh;
    CMatrix b = u * CMatrix::diagonal(db) * uh;
    // exact Hermitian symmetry
    const CMatrix ah = a.adjoint(), bh = b.adjoint();
    a = 0.5 * (a + ah);
    b = 0.5 * (b + bh);
    return Pencil(std::move(a), std::move(b));
}

BlockPencil random_block_pencil(Rng& rng, std::size_t m) {
    const double s = 1.0 / std::sqrt(static_cast<double>(2 * m));
    BlockPencil bp;
    for (CMatrix* x : {&bp.a1, &bp.a2, &bp.a3, &bp.a4, &bp.b1, &bp.b2, &bp.b3, &bp.b4}) *x = random_matrix(rng, m, m, s);
    return bp;
}

BlockPencil commuting_block_pencil(Rng& rng, std::size_t m) {
    const CMatrix u = random_unitary(rng, m);
    const CMatrix uh = u.adjoint();
    auto diag = [&](const std::vector<Complex>& d) { return u * CMatrix::diagonal(d) * uh; };
    std::vector<Complex> a1(m), b1(m), a2(m), b2(m), a3(m), b3(m);
    const std::size_t split = (m + 1) / 2;  // I = [0, split), J = [split, m)
    for (std::size_t k = 0; k < m; ++k) {
        a1[k] = rng.complex_normal();
        b1[k] = rng.complex_normal();
        if (std::abs(b1[k]) < 0.3) b1[k] += 0.5;
        if (k < split) {
            a2[k] = rng.complex_normal();
            b2[k] = rng.complex_normal();
        } else {
            a3[k] = rng.complex_normal();
            b3[k] = rng.complex_normal();
        }
    }
    BlockPencil bp;
    bp.a1 = diag(a1);
    bp.b1 = diag(b1);
    bp.a4 = bp.a1;
    bp.b4 = bp.b1;
    bp.a2 = diag(a2);
    bp.b2 = diag(b2);
    bp.a3 = diag(a3);
    bp.b3 = diag(b3);
    return bp;
}

BlockPencil shifted_copy_block_pencil(Rng& rng, std::size_t m, double delta) {
    const double s = 1.0 / std::sqrt(static_cast<double>(m));
    BlockPencil bp;
    bp.a1 = random_matrix(rng, m, m, s);
    bp.b1 = random_matrix(rng, m, m, s) + CMatrix::identity(m);
    bp.a2 = delta * bp.a1;
    bp.b2 = delta * bp.b1;
    bp.a3 = CMatrix(m, m);
    bp.b3 = CMatrix(m, m);
    bp.a4 = bp.a1;
    bp.b4 = bp.b1;
    return bp;
}

}  // namespace pencilscope
