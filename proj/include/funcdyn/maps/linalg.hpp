#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "funcdyn/algebra/field.hpp"
#include "funcdyn/algebra/poly.hpp"

namespace funcdyn {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Ring operations for the fraction-free determinant. The primary template covers FqPoly.
template <class T>
struct BareissRing {
    static bool is_zero(const T& a) { return a.is_zero(); }
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T neg(const T& a) { return -a; }
    static T exact_div(const T& a, const T& b) { return a / b; }
};

/// Determinant over an integral domain by Bareiss elimination; every division is exact.
template <class T, class Ring = BareissRing<T>>
T bareiss_det(Matrix<T> m, const T& one, const T& zero) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Ring::is_zero(m[k][k])) {
            std::size_t r = k + 1;
            while (r < n && Ring::is_zero(m[r][k])) ++r;
            if (r == n) return zero;
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = Ring::exact_div(Ring::sub(Ring::mul(m[i][j], m[k][k]), Ring::mul(m[i][k], m[k][j])), prev);
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return negate ? Ring::neg(det) : det;
}

/// Determinant over a finite field by Gaussian elimination.
inline elem_t field_det(const FieldSpec& f, Matrix<elem_t> m) {
    const std::size_t n = m.size();
    elem_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && m[r][k] == 0) ++r;
        if (r == n) return 0;
        if (r != k) {
            std::swap(m[k], m[r]);
            det = f.neg(det);
        }
        det = f.mul(det, m[k][k]);
        const elem_t inv = f.inv(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const elem_t c = f.mul(m[i][k], inv);
            for (std::size_t j = k; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(c, m[k][j]));
        }
    }
    return det;
}

/// Basis of the right nullspace {v : m v = 0} over a finite field, in reduced form.
inline std::vector<std::vector<elem_t>> nullspace(const FieldSpec& f, Matrix<elem_t> m, std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t r = row;
        while (r < m.size() && m[r][c] == 0) ++r;
        if (r == m.size()) continue;
        std::swap(m[row], m[r]);
        const elem_t inv = f.inv(m[row][c]);
        for (auto& x : m[row]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0) continue;
            const elem_t k = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(k, m[row][j]));
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<elem_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<elem_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.neg(m[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace funcdyn
