#include "pencilscope/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pencilscope/errors.hpp"

namespace pencilscope {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument(std::string("shape mismatch in ") + op);
    }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw InvalidArgument("entry count does not match rows*cols");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("ragged initializer list");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::column(std::span<const Complex> values) {
    return CMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

CMatrix CMatrix::adjoint() const {
    CMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

CMatrix CMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw InvalidArgument("block out of range");
    CMatrix b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        std::copy_n(row_ptr(row0 + i) + col0, ncols, b.row_ptr(i));
    return b;
}

void CMatrix::set_block(std::size_t row0, std::size_t col0, const CMatrix& b) {
    if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw InvalidArgument("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        std::copy_n(b.row_ptr(i), b.cols(), row_ptr(row0 + i) + col0);
}

std::vector<Complex> CMatrix::column_values(std::size_t j) const {
    std::vector<Complex> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    require_same_shape(*this, other, "+");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    require_same_shape(*this, other, "-");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator-(CMatrix a) { return a *= -1.0; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, Complex s) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("shape mismatch in *");
    CMatrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* ci = c.row_ptr(i);
        const Complex* ai = a.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = ai[k];
            if (aik == Complex{}) continue;
            const Complex* bk = b.row_ptr(k);
            for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

std::vector<Complex> multiply(const CMatrix& a, std::span<const Complex> x) {
    if (a.cols() != x.size()) throw InvalidArgument("shape mismatch in matvec");
    std::vector<Complex> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Complex* ai = a.row_ptr(i);
        Complex s{};
        for (std::size_t j = 0; j < x.size(); ++j) s += ai[j] * x[j];
        y[i] = s;
    }
    return y;
}

double vector_norm(std::span<const Complex> v) {
    // Scaled sum of squares; entries may be far from unit size.
    double scale = 0.0, ssq = 1.0;
    for (const auto& z : v) {
        for (double part : {z.real(), z.imag()}) {
            if (part == 0.0) continue;
            const double a = std::abs(part);
            if (scale < a) {
                ssq = 1.0 + ssq * (scale / a) * (scale / a);
                scale = a;
            } else {
                ssq += (a / scale) * (a / scale);
            }
        }
    }
    return scale * std::sqrt(ssq);
}

double max_abs_entry(const CMatrix& m) {
    double mx = 0.0;
    for (const auto& z : m.entries()) mx = std::max(mx, std::abs(z));
    return mx;
}

bool all_finite(const CMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

CMatrix pencil_at(const CMatrix& a, const CMatrix& b, Complex s) {
    require_same_shape(a, b, "pencil_at");
    CMatrix m(a.rows(), a.cols());
    auto out = m.entries();
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = s * eb[k] - ea[k];
    return m;
}

double frobenius_norm(const CMatrix& m) { return vector_norm(m.entries()); }

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
    Complex s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

}  // namespace pencilscope
