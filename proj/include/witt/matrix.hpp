#ifndef WITT_MATRIX_HPP
#define WITT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "witt/error.hpp"
#include "witt/rings.hpp"

namespace witt {

// Minimal dense matrix over an arbitrary ring element type, row-major.
template <class E>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<E> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), a(r * c, fill) {}

    E& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const E& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Determinant by Laplace expansion over column subsets (bitmask dynamic
// programming, O(n * 2^n) ring multiplications). Division-free, so it is
// sound over non-domains such as truncated power-series rings where
// elimination pivots can be zero divisors. Sizes here stay small (<= 12).
template <Ring R>
typename R::Elem det(const R& r, const Matrix<typename R::Elem>& m) {
    if (m.rows != m.cols) throw domain_error("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return r.one();
    if (n > 20) throw domain_error("determinant size out of range");
    std::vector<typename R::Elem> d(std::size_t(1) << n, r.zero());
    d[0] = r.one();
    for (std::size_t mask = 1; mask < d.size(); ++mask) {
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
        // Cofactor sign along this row is (-1)^(row + position-in-mask).
        bool negate = (row % 2) != 0;
        typename R::Elem acc = r.zero();
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            const auto& entry = m.at(row, j);
            if (!r.is_zero(entry)) {
                auto term = r.mul(entry, d[mask ^ (std::size_t(1) << j)]);
                acc = negate ? r.sub(acc, term) : r.add(acc, term);
            }
            negate = !negate;
        }
        d[mask] = std::move(acc);
    }
    return d.back();
}

template <Ring R>
Matrix<typename R::Elem> mat_mul(const R& r, const Matrix<typename R::Elem>& x,
                                 const Matrix<typename R::Elem>& y) {
    if (x.cols != y.rows) throw domain_error("matrix shape mismatch");
    Matrix<typename R::Elem> out(x.rows, y.cols, r.zero());
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (r.is_zero(x.at(i, k))) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                out.at(i, j) = r.add(out.at(i, j), r.mul(x.at(i, k), y.at(k, j)));
        }
    return out;
}

template <Ring R>
typename R::Elem mat_trace(const R& r, const Matrix<typename R::Elem>& m) {
    if (m.rows != m.cols) throw domain_error("trace of a non-square matrix");
    typename R::Elem acc = r.zero();
    for (std::size_t i = 0; i < m.rows; ++i) acc = r.add(acc, m.at(i, i));
    return acc;
}

// Solve A x = b over a field by Gaussian elimination with partial (first
// nonzero) pivoting. Throws not_invertible when A is singular.
template <RingWithInv R>
std::vector<typename R::Elem> solve_linear(const R& r, Matrix<typename R::Elem> A,
                                           std::vector<typename R::Elem> b) {
    const std::size_t n = A.rows;
    if (A.cols != n || b.size() != n) throw domain_error("solve_linear shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && r.is_zero(A.at(pivot, col))) ++pivot;
        if (pivot == n) throw not_invertible("singular linear system");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        const auto piv_inv = r.inv(A.at(col, col));
        for (std::size_t j = col; j < n; ++j) A.at(col, j) = r.mul(piv_inv, A.at(col, j));
        b[col] = r.mul(piv_inv, b[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || r.is_zero(A.at(i, col))) continue;
            const auto f = A.at(i, col);
            for (std::size_t j = col; j < n; ++j)
                A.at(i, j) = r.sub(A.at(i, j), r.mul(f, A.at(col, j)));
            b[i] = r.sub(b[i], r.mul(f, b[col]));
        }
    }
    return b;
}

} // namespace witt

#endif
