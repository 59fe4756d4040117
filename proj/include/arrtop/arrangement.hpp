#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arrtop/matrix.hpp"

namespace arrtop {

/// Central hyperplane arrangement: d linear forms in n+1 variables, viewed
/// projectively in P^n. Forms must be nonzero and pairwise non-proportional,
/// so the defining product Q is reduced.
struct Arrangement {
    int n = 0;                        // projective dimension
    std::vector<VecQ> forms;          // d rows of length n+1
    std::vector<std::string> labels;  // optional, parallel to forms

    int d() const { return static_cast<int>(forms.size()); }
    int ambient() const { return n + 1; }
};

inline Arrangement make_arrangement(int n, std::vector<VecQ> forms,
                                    std::vector<std::string> labels = {}) {
    if (n < 1) throw input_error("projective dimension must be >= 1");
    if (forms.empty()) throw input_error("arrangement needs at least one hyperplane");
    if (forms.size() > 63) throw input_error("too many hyperplanes (limit 63)");
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (static_cast<int>(forms[i].size()) != n + 1)
            throw input_error("form " + std::to_string(i + 1) + " has wrong length");
        if (is_zero_vector(forms[i]))
            throw input_error("zero form at index " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (proportional(forms[i], forms[j]))
                throw input_error("proportional forms " + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1));
    Arrangement a;
    a.n = n;
    a.forms = std::move(forms);
    a.labels = std::move(labels);
    return a;
}

/// One element of the intersection lattice: a linear subspace cut out by the
/// member hyperplanes. Identity is the canonical RREF of its defining forms.
struct Flat {
    RatMatrix key;            // rowspace basis (RREF, rank rows); empty for the bottom
    int rank = 0;             // codimension in C^{n+1}
    std::uint64_t members = 0; // bit i set iff form i vanishes on the flat
    bool synthetic = false;   // true for the forced top of a generic-section lattice
};

/// Intersection lattice of a central arrangement, graded by codimension.
/// flats[0] is the bottom (whole space); order is by member-set inclusion.
struct IntersectionLattice {
    int ambient = 0; // dimension of the ambient vector space
    int nforms = 0;
    std::vector<Flat> flats;
    std::vector<long long> mu; // parallel to flats

    int dim(std::size_t i) const { return ambient - flats[i].rank; }
    int top_rank() const {
        int r = 0;
        for (const auto& f : flats) r = std::max(r, f.rank);
        return r;
    }
    /// Number of flats per rank, indexed 0..top_rank().
    std::vector<long long> profile() const {
        std::vector<long long> p(static_cast<std::size_t>(top_rank()) + 1, 0);
        for (const auto& f : flats) ++p[static_cast<std::size_t>(f.rank)];
        return p;
    }
    bool leq(std::size_t i, std::size_t j) const { // flats[i] <= flats[j]
        return (flats[i].members & flats[j].members) == flats[i].members;
    }
};

/// Recursive Mobius function over the lattice order:
/// mu(bottom) = 1, mu(X) = -sum_{Y < X} mu(Y).
inline std::vector<long long> mobius_values(const IntersectionLattice& L) {
    // flats are sorted by rank, so all Y < X precede X
    std::vector<long long> mu(L.flats.size(), 0);
    for (std::size_t i = 0; i < L.flats.size(); ++i) {
        if (L.flats[i].rank == 0) {
            mu[i] = 1;
            continue;
        }
        long long s = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (L.leq(j, i) && L.flats[j].members != L.flats[i].members) s += mu[j];
        mu[i] = -s;
    }
    return mu;
}

/// Builds the full intersection lattice by breadth-first closure: extend each
/// known flat by one more hyperplane, close, and dedupe on the canonical key.
inline IntersectionLattice build_lattice(const Arrangement& A) {
    const int d = A.d();
    const auto all_members = [&](const RatMatrix& basis) {
        std::uint64_t m = 0;
        for (int i = 0; i < d; ++i)
            if (in_rowspace(basis, A.forms[static_cast<std::size_t>(i)])) m |= 1ull << i;
        return m;
    };

    std::map<std::string, Flat> seen;
    Flat bottom;
    bottom.key = RatMatrix(0, static_cast<std::size_t>(A.ambient()));
    bottom.rank = 0;
    bottom.members = 0;
    seen[key_string(bottom.key)] = bottom;

    std::vector<Flat> frontier{bottom};
    while (!frontier.empty()) {
        std::vector<Flat> next;
        for (const Flat& X : frontier) {
            for (int i = 0; i < d; ++i) {
                if (X.members & (1ull << i)) continue;
                RatMatrix stacked = stack_row(X.key, A.forms[static_cast<std::size_t>(i)]);
                RatMatrix basis = rowspace_basis(stacked);
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

    IntersectionLattice L;
    L.ambient = A.ambient();
    L.nforms = d;
    for (auto& [k, f] : seen) L.flats.push_back(std::move(f));
    std::sort(L.flats.begin(), L.flats.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return key_string(a.key) < key_string(b.key);
    });
    L.mu = mobius_values(L);
    return L;
}

/// Characteristic polynomial chi(t) = sum_X mu(X) t^{dim X};
/// coefficient of t^k at index k.
inline std::vector<long long> char_poly(const IntersectionLattice& L) {
    std::vector<long long> c(static_cast<std::size_t>(L.ambient) + 1, 0);
    for (std::size_t i = 0; i < L.flats.size(); ++i)
        c[static_cast<std::size_t>(L.dim(i))] += L.mu[i];
    return c;
}

/// Whitney numbers |mu| by rank: the Betti numbers of the affine complement
/// in C^{ambient}.
inline std::vector<long long> whitney_abs(const IntersectionLattice& L) {
    std::vector<long long> w(static_cast<std::size_t>(L.top_rank()) + 1, 0);
    for (std::size_t i = 0; i < L.flats.size(); ++i) {
        long long v = L.mu[i];
        w[static_cast<std::size_t>(L.flats[i].rank)] += v < 0 ? -v : v;
    }
    return w;
}

/// Betti numbers of the projective complement D(Q): the affine complement
/// factors off a C^* for central arrangements, so its Poincare polynomial is
/// exactly divisible by 1+t. A nonzero remainder means the lattice is broken.
inline std::vector<long long> poincare_projective(const IntersectionLattice& L) {
    std::vector<long long> w = whitney_abs(L);
    if (w.size() < 2) throw internal_error("poincare_projective: lattice has a single flat");
    std::vector<long long> q(w.size() - 1, 0);
    q[0] = w[0];
    for (std::size_t k = 1; k + 1 < w.size(); ++k) q[k] = w[k] - q[k - 1];
    if (w.back() != q[q.size() - 1])
        throw internal_error("poincare_projective: division by 1+t is not exact");
    return q;
}

inline bool is_essential(const IntersectionLattice& L) { return L.top_rank() == L.ambient; }

inline bool is_essential(const Arrangement& A) {
    return static_cast<int>(rank(RatMatrix::from_rows(A.forms))) == A.ambient();
}

/// Lattice of the arrangement cut by a generic codimension-i subspace.
/// Flats of rank below the new top survive with their Mobius values; all
/// higher flats collapse into a single synthetic top whose value is forced by
/// the zero-sum condition. i = 0 reproduces the input lattice.
inline IntersectionLattice truncate_generic_section(const IntersectionLattice& L, int i) {
    if (i < 0 || i > L.ambient - 1)
        throw input_error("truncate_generic_section: codimension out of range");
    const int new_top = std::min(L.top_rank(), L.ambient - i);
    IntersectionLattice S;
    S.ambient = L.ambient - i;
    S.nforms = L.nforms;
    long long below_sum = 0;
    for (std::size_t k = 0; k < L.flats.size(); ++k) {
        if (L.flats[k].rank < new_top) {
            S.flats.push_back(L.flats[k]);
            S.mu.push_back(L.mu[k]);
            below_sum += L.mu[k];
        }
    }
    Flat top;
    top.key = RatMatrix(0, 0);
    top.rank = new_top;
    top.members = (L.nforms >= 64) ? ~0ull : ((1ull << L.nforms) - 1);
    top.synthetic = true;
    S.flats.push_back(top);
    S.mu.push_back(-below_sum);
    return S;
}

/// Arrangement with hyperplane `idx` removed (deletion).
inline Arrangement delete_hyperplane(const Arrangement& A, int idx) {
    if (idx < 0 || idx >= A.d()) throw input_error("delete_hyperplane: index out of range");
    if (A.d() < 2) throw input_error("delete_hyperplane: would leave an empty arrangement");
    std::vector<VecQ> forms;
    for (int i = 0; i < A.d(); ++i)
        if (i != idx) forms.push_back(A.forms[static_cast<std::size_t>(i)]);
    return make_arrangement(A.n, std::move(forms));
}

/// Arrangement induced on hyperplane `idx` (restriction): the remaining forms
/// expressed in coordinates on ker(l_idx), with coincident traces merged.
inline Arrangement restrict_to_hyperplane(const Arrangement& A, int idx) {
    if (idx < 0 || idx >= A.d()) throw input_error("restrict_to_hyperplane: index out of range");
    if (A.n < 2) throw input_error("restrict_to_hyperplane: needs projective dimension >= 2");
    RatMatrix row = RatMatrix::from_rows({A.forms[static_cast<std::size_t>(idx)]});
    std::vector<VecQ> basis = kernel_basis(row); // n vectors spanning the hyperplane
    std::vector<VecQ> restricted;
    for (int i = 0; i < A.d(); ++i) {
        if (i == idx) continue;
        VecQ r(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            r[j] = dot(A.forms[static_cast<std::size_t>(i)], basis[j]);
        if (is_zero_vector(r)) continue; // impossible for non-proportional forms
        bool dup = false;
        for (const auto& prev : restricted)
            if (proportional(prev, r)) {
                dup = true;
                break;
            }
        if (!dup) restricted.push_back(std::move(r));
    }
    return make_arrangement(A.n - 1, std::move(restricted));
}

} // namespace arrtop
