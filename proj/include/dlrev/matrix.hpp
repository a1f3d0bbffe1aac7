#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <dlrev/error.hpp>
#include <dlrev/ring.hpp>

namespace dlrev {

template <typename R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_) {
            throw Error(ErrorCode::ValidationError, "matrix data does not match its shape");
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = R(1);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    R &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_) {
            throw Error(ErrorCode::ValidationError, "matrix shapes do not conform");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += a(i, k) * b(k, j);
                }
            }
        }
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

// Fraction-free (Bareiss) elimination. Every division is exact, so this
// works over any integral domain providing exact_div, including MultiPoly.
template <typename R>
R det_fraction_free(Matrix<R> m)
{
    if (!m.is_square()) {
        throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return R(1);
    }
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) {
                ++p;
            }
            if (p == n) {
                return R(0);
            }
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_div(num, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
}

// Ordinary Gaussian elimination over the field of rationals.
Rational det_gauss(Matrix<Rational> m);

} // namespace dlrev
