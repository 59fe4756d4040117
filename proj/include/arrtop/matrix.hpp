#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/rational.hpp"

namespace arrtop {

/// Dense exact rational matrix, row-major.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> a; // rows*cols entries

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

    static RatMatrix from_rows(const std::vector<VecQ>& rs) {
        if (rs.empty()) return RatMatrix();
        RatMatrix m(rs.size(), rs[0].size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != m.cols) throw internal_error("from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
        }
        return m;
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    VecQ row(std::size_t i) const {
        return VecQ(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                    a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    bool operator==(const RatMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

/// Exact reduced row echelon form. Pivots are 1, pivot columns are cleared
/// above and below. Returns (rank, reduced matrix of the same shape).
inline std::pair<std::size_t, RatMatrix> rref(RatMatrix m) {
    if (m.rows == 0 || m.cols == 0) return {0, m};
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        }
        const Rational
            inv = 1 / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) -= f * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return {pivot_row, m};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).first; }

/// Canonical basis of the row space: RREF with zero rows dropped.
/// Two row sets span the same subspace iff their bases compare equal.
inline RatMatrix rowspace_basis(const RatMatrix& m) {
    auto [rk, r] = rref(m);
    RatMatrix basis(rk, m.cols);
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) basis.at(i, j) = r.at(i, j);
    return basis;
}

inline std::string key_string(const RatMatrix& m) {
    std::string s = std::to_string(m.rows) + "x" + std::to_string(m.cols) + ":";
    for (const auto& q : m.a) {
        s += q.str();
        s += ',';
    }
    return s;
}

/// Membership of v in the row space of an RREF basis (reduce against pivots).
inline bool in_rowspace(const RatMatrix& basis, const VecQ& v) {
    if (v.size() != basis.cols) throw internal_error("in_rowspace: length mismatch");
    VecQ w = v;
    for (std::size_t i = 0; i < basis.rows; ++i) {
        std::size_t p = 0;
        while (p < basis.cols && basis.at(i, p) == 0) ++p;
        if (p == basis.cols) continue;
        if (w[p] != 0) {
            const Rational f = w[p]; // pivot entry is 1
            for (std::size_t j = p; j < basis.cols; ++j) w[j] -= f * basis.at(i, j);
        }
    }
    return is_zero_vector(w);
}

/// Basis of the kernel {x : m x = 0}, one vector per free column.
inline std::vector<VecQ> kernel_basis(const RatMatrix& m) {
    auto [rk, r] = rref(m);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t p = 0;
        while (p < m.cols && r.at(i, p) == 0) ++p;
        pivot_col.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<VecQ> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        VecQ v(m.cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivot_col[i]] = -r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline RatMatrix stack_row(const RatMatrix& m, const VecQ& v) {
    if (m.rows != 0 && v.size() != m.cols) throw internal_error("stack_row: length mismatch");
    RatMatrix out(m.rows + 1, m.rows == 0 ? v.size() : m.cols);
    out.a = m.a;
    out.a.insert(out.a.end(), v.begin(), v.end());
    return out;
}

} // namespace arrtop
