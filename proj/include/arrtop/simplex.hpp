#pragma once

#include <cstddef>
#include <vector>

#include "arrtop/rational.hpp"
#include "arrtop/common.hpp"

namespace arrtop {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    VecQ x; // primal solution for Optimal
};

namespace detail {

/// Dense exact simplex tableau for max c.x s.t. Ax <= b, x >= 0.
/// Bland's smallest-index rule throughout, so no cycling and no tolerances.
class SimplexTableau {
  public:
    SimplexTableau(const std::vector<VecQ>& A, const VecQ& b, std::size_t nvars)
        : nvars_(nvars), m_(A.size()), ncols_(nvars + A.size() + 1) {
        rows_.assign(m_, std::vector<Rational>(ncols_, Rational(0)));
        basic_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < nvars_; ++j) rows_[i][j] = A[i][j];
            rows_[i][nvars_ + i] = 1; // slack
            rows_[i][ncols_ - 1] = b[i];
            basic_[i] = nvars_ + i;
        }
    }

    /// Phase 1 (only if some b < 0): append one artificial column per negative
    /// row, maximize minus their sum; feasible iff the optimum is 0.
    bool make_feasible() {
        std::vector<std::size_t> art_rows;
        for (std::size_t i = 0; i < m_; ++i)
            if (rows_[i][ncols_ - 1] < 0) art_rows.push_back(i);
        if (art_rows.empty()) return true;

        const std::size_t first_art = ncols_ - 1;
        for (std::size_t k = 0; k < art_rows.size(); ++k) {
            for (auto& row : rows_) row.insert(row.end() - 1, Rational(0));
            std::size_t i = art_rows[k];
            for (auto& v : rows_[i]) v = -v;
            rows_[i][first_art + k] = 1;
            basic_[i] = first_art + k;
        }
        ncols_ += art_rows.size();

        obj_.assign(ncols_, Rational(0));
        for (std::size_t k = 0; k < art_rows.size(); ++k) obj_[first_art + k] = 1;
        for (std::size_t i : art_rows) price_out(i);
        run();
        if (obj_[ncols_ - 1] != 0) return false;

        // drive any still-basic artificial out, or drop its (redundant) row
        for (std::size_t i = 0; i < m_;) {
            if (basic_[i] < first_art) {
                ++i;
                continue;
            }
            std::size_t e = first_art;
            for (std::size_t j = 0; j < first_art; ++j)
                if (rows_[i][j] != 0) {
                    e = j;
                    break;
                }
            if (e == first_art) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            } else {
                pivot(i, e);
                ++i;
            }
        }
        for (auto& row : rows_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(first_art),
                                          row.end() - 1);
        ncols_ = first_art + 1;
        return true;
    }

    /// Installs max objective c (length nvars) and runs phase 2.
    LpResult optimize(const VecQ& c) {
        obj_.assign(ncols_, Rational(0));
        for (std::size_t j = 0; j < nvars_ && j < c.size(); ++j) obj_[j] = -c[j];
        for (std::size_t i = 0; i < m_; ++i)
            if (obj_[basic_[i]] != 0) price_out(i);
        if (!run()) {
            LpResult r;
            r.status = LpStatus::Unbounded;
            return r;
        }
        LpResult r;
        r.status = LpStatus::Optimal;
        r.value = obj_[ncols_ - 1];
        r.x.assign(nvars_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basic_[i] < nvars_) r.x[basic_[i]] = rows_[i][ncols_ - 1];
        return r;
    }

  private:
    void price_out(std::size_t i) {
        Rational f = obj_[basic_[i]];
        for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[i][j];
    }

    void pivot(std::size_t r, std::size_t e) {
        Rational p = rows_[r][e];
        for (auto& v : rows_[r]) v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][e] == 0) continue;
            Rational f = rows_[i][e];
            for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        if (obj_[e] != 0) {
            Rational f = obj_[e];
            for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[r][j];
        }
        basic_[r] = e;
    }

    /// Bland iterations until optimal (true) or unbounded (false).
    bool run() {
        for (;;) {
            std::size_t e = ncols_ - 1;
            for (std::size_t j = 0; j + 1 < ncols_; ++j)
                if (obj_[j] < 0) {
                    e = j;
                    break;
                }
            if (e == ncols_ - 1) return true;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][e] <= 0) continue;
                Rational ratio = rows_[i][ncols_ - 1] / rows_[i][e];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basic_[i] < basic_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, e);
        }
    }

    std::size_t nvars_, m_, ncols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> obj_;
    std::vector<std::size_t> basic_;
};

} // namespace detail

/// Exact LP: maximize c.x subject to Ax <= b, x >= 0.
inline LpResult solve_lp_max(const std::vector<VecQ>& A, const VecQ& b, const VecQ& c) {
    if (A.size() != b.size()) throw input_error("solve_lp_max: |A| != |b|");
    std::size_t nvars = c.size();
    for (const auto& row : A)
        if (row.size() != nvars) throw input_error("solve_lp_max: row length != |c|");
    if (A.empty()) {
        LpResult r;
        for (const auto& v : c)
            if (v > 0) {
                r.status = LpStatus::Unbounded;
                return r;
            }
        r.status = LpStatus::Optimal;
        r.value = 0;
        r.x.assign(nvars, Rational(0));
        return r;
    }
    detail::SimplexTableau t(A, b, nvars);
    if (!t.make_feasible()) {
        LpResult r;
        r.status = LpStatus::Infeasible;
        return r;
    }
    return t.optimize(c);
}

} // namespace arrtop
