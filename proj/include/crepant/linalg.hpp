#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crepant/errors.hpp"
#include "crepant/rational.hpp"

namespace crepant {

/// Dense row-major matrix over an exact field (or the integers).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ValidationError("matrix dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
        }
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<long>;
using RatMatrix = Matrix<Rational>;

/// Determinant by Gaussian elimination over a field.
template <class K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    K det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return K(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        const K inv_pivot = K(1) / m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const K f = m(r, c) * inv_pivot;
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Gauss-Jordan inverse; nullopt for singular input.
template <class K>
std::optional<Matrix<K>> inverse(Matrix<K> m) {
    if (m.rows() != m.cols()) throw ValidationError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<K> inv = Matrix<K>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(p, j), m(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        const K inv_pivot = K(1) / m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= inv_pivot;
            inv(c, j) *= inv_pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            const K f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace crepant
