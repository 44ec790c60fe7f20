#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pencilscope {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
///
/// The universal carrier for pencil blocks, resolvents and powers. Values
/// are plain data: copy freely, share across threads read-only.
class CMatrix {
public:
    CMatrix() = default;
    /// rows × cols of zeros.
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static CMatrix diagonal(std::span<const Complex> diag);
    static CMatrix column(std::span<const Complex> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<Complex> entries() noexcept { return entries_; }
    std::span<const Complex> entries() const noexcept { return entries_; }
    Complex* row_ptr(std::size_t i) noexcept { return entries_.data() + i * cols_; }
    const Complex* row_ptr(std::size_t i) const noexcept { return entries_.data() + i * cols_; }

    /// Conjugate transpose.
    CMatrix adjoint() const;
    CMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const CMatrix& b);
    std::vector<Complex> column_values(std::size_t j) const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(Complex s);

    bool operator==(const CMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(CMatrix a, Complex s);

std::vector<Complex> multiply(const CMatrix& a, std::span<const Complex> x);

double frobenius_norm(const CMatrix& m);
double max_abs_entry(const CMatrix& m);
bool all_finite(const CMatrix& m);

/// s·B − A, the pencil evaluated at s.
CMatrix pencil_at(const CMatrix& a, const CMatrix& b, Complex s);

double vector_norm(std::span<const Complex> v);
Complex dot(std::span<const Complex> x, std::span<const Complex> y);  // xᴴy

}  // namespace pencilscope
