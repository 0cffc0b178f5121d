#include "centersvar/exact_linalg.hpp"

#include <cassert>

namespace centersvar {

std::vector<std::size_t> rref(RMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(row, pivot);
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RMatrix m) { return rref(m).size(); }

RMatrix kernel(const RMatrix& m) {
    RMatrix r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    RMatrix k(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const std::size_t fc = free_cols[f];
        k(fc, f) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) k(pivots[p], f) = -r(p, fc);
    }
    return k;
}

std::vector<RVector> kernel_vectors(const RMatrix& m) {
    const RMatrix k = kernel(m);
    std::vector<RVector> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.column(j));
    return out;
}

Rational det(RMatrix m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m(pivot, col))) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            m.swap_rows(pivot, col);
            result = -result;
        }
        result *= m(col, col);
        const Rational inv = 1 / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            const Rational factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return result;
}

std::optional<RMatrix> inverse(const RMatrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    RMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    RMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
    assert(a.rows() == a.cols() && a.rows() == b.size());
    const std::size_t n = a.rows();
    RMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    RVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

}  // namespace centersvar
