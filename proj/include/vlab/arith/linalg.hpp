#pragma once

#include <optional>
#include <vector>

#include "vlab/arith/fields.hpp"
#include "vlab/arith/integer.hpp"

namespace vlab {

template <Field F>
using Matrix = std::vector<std::vector<typename F::Elem>>;

/// In-place reduced row echelon form; returns pivot columns.
template <Field F>
std::vector<std::size_t> rref(const F& k, Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && k.is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        auto inv = k.inv(m[r][c]);
        for (auto& x : m[r]) x = k.mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || k.is_zero(m[i][c])) continue;
            auto t = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(t, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {x : m x = 0}.
template <Field F>
std::vector<std::vector<typename F::Elem>> kernel(const F& k, Matrix<F> m, std::size_t cols) {
    std::vector<std::vector<typename F::Elem>> out;
    auto pivots = m.empty() ? std::vector<std::size_t>{} : rref(k, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Elem> v(cols, k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(m[i][free]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Some solution of m x = b, if any.
template <Field F>
std::optional<std::vector<typename F::Elem>> solve(const F& k, const Matrix<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    Matrix<F> aug = m;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    auto pivots = rref(k, aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<typename F::Elem> x(cols, k.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

template <Field F>
std::size_t rank(const F& k, Matrix<F> m) {
    return rref(k, m).size();
}

/// Inverse of a square matrix; nullopt when singular.
template <Field F>
std::optional<Matrix<F>> inverse(const F& k, const Matrix<F>& m) {
    const std::size_t n = m.size();
    Matrix<F> aug = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? k.one() : k.zero());
    auto pivots = rref(k, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + n, aug[i].end());
    return inv;
}

using IntMatrix = std::vector<std::vector<Int>>;

/// Row-style Hermite normal form of the lattice spanned by the rows: upper
/// triangular, positive pivots, entries above a pivot reduced into
/// [0, pivot). Zero rows are dropped. When `modulus` is nonzero the lattice is
/// known to contain modulus * Z^n and that is used to keep entries small.
IntMatrix hnf(IntMatrix rows, std::size_t cols, const Int& modulus = 0);

/// Determinant of a square integer matrix (Bareiss).
Int determinant(IntMatrix m);

} // namespace vlab
