#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/simplex.hpp"

namespace arrtop {

/// Real affine hyperplane: normal . x = offset.
struct AffineHyperplane {
    VecQ normal;
    Rational offset;
};

struct AffineArrangement {
    int n = 0;
    std::vector<AffineHyperplane> hyperplanes;

    int d() const { return static_cast<int>(hyperplanes.size()); }
};

inline AffineArrangement make_affine_arrangement(int n, std::vector<AffineHyperplane> planes) {
    if (n < 1) throw input_error("affine dimension must be >= 1");
    if (planes.empty()) throw input_error("affine arrangement needs at least one hyperplane");
    auto augmented = [n](const AffineHyperplane& h) {
        VecQ v = h.normal;
        v.push_back(h.offset);
        return v;
    };
    for (std::size_t i = 0; i < planes.size(); ++i) {
        if (static_cast<int>(planes[i].normal.size()) != n)
            throw input_error("hyperplane " + std::to_string(i + 1) + " has wrong normal length");
        if (is_zero_vector(planes[i].normal))
            throw input_error("zero normal at index " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j)
            if (proportional(augmented(planes[i]), augmented(planes[j])))
                throw input_error("repeated hyperplanes " + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1));
    AffineArrangement a;
    a.n = n;
    a.hyperplanes = std::move(planes);
    return a;
}

inline bool affine_essential(const AffineArrangement& A) {
    std::vector<VecQ> normals;
    for (const auto& h : A.hyperplanes) normals.push_back(h.normal);
    return static_cast<int>(rank(RatMatrix::from_rows(normals))) == A.n;
}

struct RegionReport {
    long long regions = 0;
    long long bounded = 0;
    bool essential = true;
    std::vector<std::string> sign_vectors; // optional, '+'/'-' per hyperplane
};

struct DeconeResult {
    AffineArrangement aff;
    VecQ chart; // the verified-generic linear form c with chart c.x = 1
    int attempts = 0;
};

/// Deconing on a verified-generic chart: picks a random rational hyperplane
/// H0 = {c.x = 1}, checks exactly that H0 contains no flat of the lattice
/// (in particular is not one of the hyperplanes), and induces the affine
/// arrangement of the d traces. The affine complement realizes D(Q) minus H.
inline DeconeResult generic_decone(const Arrangement& A, const IntersectionLattice& L,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    const int check_up_to = std::min(L.top_rank(), A.n);
    for (int attempt = 1; attempt <= 256; ++attempt) {
        VecQ c(static_cast<std::size_t>(A.ambient()));
        for (auto& v : c) v = coef(rng);
        if (is_zero_vector(c)) continue;
        bool good = true;
        for (const Flat& X : L.flats) {
            if (X.rank < 1 || X.rank > check_up_to) continue;
            if (in_rowspace(X.key, c)) {
                good = false;
                break;
            }
        }
        if (!good) continue;

        std::size_t piv = 0;
        while (c[piv] == 0) ++piv;
        VecQ p(c.size(), Rational(0));
        p[piv] = 1 / c[piv]; // chart point with c.p = 1
        std::vector<VecQ> dirs = kernel_basis(RatMatrix::from_rows({c}));
        std::vector<AffineHyperplane> planes;
        for (const VecQ& l : A.forms) {
            AffineHyperplane h;
            h.normal.resize(dirs.size());
            for (std::size_t j = 0; j < dirs.size(); ++j) h.normal[j] = dot(l, dirs[j]);
            h.offset = -dot(l, p);
            planes.push_back(std::move(h));
        }
        DeconeResult r;
        r.aff = make_affine_arrangement(A.n, std::move(planes));
        r.chart = std::move(c);
        r.attempts = attempt;
        return r;
    }
    throw internal_error("generic_decone: no generic chart found in 256 attempts");
}

inline DeconeResult generic_decone(const Arrangement& A, std::uint64_t seed) {
    return generic_decone(A, build_lattice(A), seed);
}

namespace detail {

/// Open cell with strict signs s_i(a_i.x - b_i) > 0 for i < signs.size() is
/// nonempty iff the LP max eps, s.t. s_i(a_i.x - b_i) >= eps, eps <= 1, has a
/// strictly positive optimum. x is split x = u+ - u- to fit the x >= 0 form.
inline bool cell_nonempty(const AffineArrangement& A, const std::vector<int>& signs) {
    const std::size_t n = static_cast<std::size_t>(A.n);
    const std::size_t nv = 2 * n + 1; // u+, u-, eps
    std::vector<VecQ> rows;
    VecQ rhs;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        VecQ row(nv, Rational(0));
        const auto& h = A.hyperplanes[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = -signs[i] * h.normal[j];
            row[n + j] = signs[i] * h.normal[j];
        }
        row[2 * n] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(-signs[i] * h.offset);
    }
    VecQ cap(nv, Rational(0));
    cap[2 * n] = 1;
    rows.push_back(std::move(cap));
    rhs.push_back(1);
    VecQ obj(nv, Rational(0));
    obj[2 * n] = 1;
    LpResult r = solve_lp_max(rows, rhs, obj);
    return r.status == LpStatus::Optimal && r.value > 0;
}

/// The closed cell of an (open-nonempty) sign vector is bounded iff every
/// coordinate has finite max and min over it: 2n LPs.
inline bool cell_bounded(const AffineArrangement& A, const std::vector<int>& signs) {
    const std::size_t n = static_cast<std::size_t>(A.n);
    std::vector<VecQ> rows;
    VecQ rhs;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        VecQ row(2 * n, Rational(0));
        const auto& h = A.hyperplanes[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = -signs[i] * h.normal[j];
            row[n + j] = signs[i] * h.normal[j];
        }
        rows.push_back(std::move(row));
        rhs.push_back(-signs[i] * h.offset);
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (int dir : {1, -1}) {
            VecQ obj(2 * n, Rational(0));
            obj[j] = dir;
            obj[n + j] = -dir;
            if (solve_lp_max(rows, rhs, obj).status == LpStatus::Unbounded) return false;
        }
    }
    return true;
}

} // namespace detail

/// Exact enumeration of the open regions by incremental sign-vector
/// insertion; every kept vector is certified nonempty by LP.
inline RegionReport enumerate_regions(const AffineArrangement& A,
                                      bool want_sign_vectors = false) {
    if (A.n > 3) throw input_error("enumerate_regions: n <= 3 only");
    if (A.d() > 12) throw input_error("enumerate_regions: d <= 12 only");
    std::vector<std::vector<int>> cells{{}};
    for (int k = 0; k < A.d(); ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& cell : cells) {
            for (int s : {1, -1}) {
                std::vector<int> ext = cell;
                ext.push_back(s);
                if (detail::cell_nonempty(A, ext)) next.push_back(std::move(ext));
            }
        }
        cells = std::move(next);
    }
    RegionReport r;
    r.regions = static_cast<long long>(cells.size());
    r.essential = affine_essential(A);
    for (const auto& cell : cells)
        if (detail::cell_bounded(A, cell)) ++r.bounded;
    if (want_sign_vectors) {
        for (const auto& cell : cells) {
            std::string s;
            for (int v : cell) s += (v > 0 ? '+' : '-');
            r.sign_vectors.push_back(std::move(s));
        }
        std::sort(r.sign_vectors.begin(), r.sign_vectors.end());
    }
    return r;
}

/// Affine intersection semilattice: flats are the nonempty intersections,
/// keyed by the RREF of their augmented equation rows [normal | offset].
struct AffineSemilattice {
    int n = 0;
    int nforms = 0;
    std::vector<Flat> flats; // rank = codim; members as in the central case
    std::vector<long long> mu;

    int dim(std::size_t i) const { return n - flats[i].rank; }
    bool leq(std::size_t i, std::size_t j) const {
        return (flats[i].members & flats[j].members) == flats[i].members;
    }
};

inline AffineSemilattice build_affine_semilattice(const AffineArrangement& A) {
    const int d = A.d();
    const std::size_t cols = static_cast<std::size_t>(A.n) + 1;
    auto augmented = [&](int i) {
        VecQ v = A.hyperplanes[static_cast<std::size_t>(i)].normal;
        v.push_back(A.hyperplanes[static_cast<std::size_t>(i)].offset);
        return v;
    };
    auto inconsistent = [&](const RatMatrix& basis) { // pivot in the offset column
        for (std::size_t i = 0; i < basis.rows; ++i) {
            bool zero_lhs = true;
            for (std::size_t j = 0; j + 1 < cols; ++j)
                if (basis.at(i, j) != 0) {
                    zero_lhs = false;
                    break;
                }
            if (zero_lhs && basis.at(i, cols - 1) != 0) return true;
        }
        return false;
    };
    auto all_members = [&](const RatMatrix& basis) {
        std::uint64_t m = 0;
        for (int i = 0; i < d; ++i)
            if (in_rowspace(basis, augmented(i))) m |= 1ull << i;
        return m;
    };

    std::map<std::string, Flat> seen;
    Flat bottom;
    bottom.key = RatMatrix(0, cols);
    seen[key_string(bottom.key)] = bottom;
    std::vector<Flat> frontier{bottom};
    while (!frontier.empty()) {
        std::vector<Flat> next;
        for (const Flat& X : frontier) {
            for (int i = 0; i < d; ++i) {
                if (X.members & (1ull << i)) continue;
                RatMatrix basis = rowspace_basis(stack_row(X.key, augmented(i)));
                if (inconsistent(basis)) continue;
                std::string key = key_string(basis);
                if (seen.count(key)) continue;
                Flat f;
                f.key = std::move(basis);
                f.rank = static_cast<int>(f.key.rows);
                f.members = all_members(f.key);
                seen[key] = f;
                next.push_back(seen[key]);
            }
        }
        frontier = std::move(next);
    }

    AffineSemilattice S;
    S.n = A.n;
    S.nforms = d;
    for (auto& [k, f] : seen) S.flats.push_back(std::move(f));
    std::sort(S.flats.begin(), S.flats.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return key_string(a.key) < key_string(b.key);
    });
    S.mu.assign(S.flats.size(), 0);
    for (std::size_t i = 0; i < S.flats.size(); ++i) {
        if (S.flats[i].rank == 0) {
            S.mu[i] = 1;
            continue;
        }
        long long s = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (S.leq(j, i) && S.flats[j].members != S.flats[i].members) s += S.mu[j];
        S.mu[i] = -s;
    }
    return S;
}

/// Region counts from the semilattice characteristic polynomial:
/// regions = (-1)^n chi(-1), bounded = (-1)^n chi(1) (essential case).
inline RegionReport zaslavsky_counts(const AffineArrangement& A) {
    AffineSemilattice S = build_affine_semilattice(A);
    long long chi_m1 = 0, chi_p1 = 0;
    for (std::size_t i = 0; i < S.flats.size(); ++i) {
        const int dim = S.dim(i);
        chi_m1 += S.mu[i] * ((dim % 2 == 0) ? 1 : -1);
        chi_p1 += S.mu[i];
    }
    const long long sign = (A.n % 2 == 0) ? 1 : -1;
    RegionReport r;
    r.regions = sign * chi_m1;
    r.essential = affine_essential(A);
    r.bounded = r.essential ? sign * chi_p1 : 0;
    return r;
}

} // namespace arrtop
