#pragma once

#include <vector>

#include "arrtop/arrangement.hpp"

namespace arrtop {

/// Minimal CW model of the projective complement: the space is homotopy
/// equivalent to a complex with exactly b_k cells in dimension k.
struct CWModel {
    std::vector<long long> cells; // indexed by dimension 0..n
    long long euler = 0;
};

/// Data for the identity (-1)^n (chi(D(Q)) - chi(D(Q) cap H)) = b_n(D(Q)),
/// H a generic hyperplane.
struct EulerReport {
    long long chi_projective_complement = 0;
    long long chi_section = 0;
    long long chi_difference = 0;
    long long top_betti = 0;
};

/// One generic-section step of the alternating-sum identity.
struct SectionTerm {
    int i = 0;       // codimension of the generic section
    int ambient = 0; // ambient dimension of the section's cone
    long long grad_degree = 0;
    long long term = 0; // (-1)^{n-i} * grad_degree
};

inline std::vector<long long> betti_projective(const IntersectionLattice& L) {
    std::vector<long long> b = poincare_projective(L);
    b.resize(static_cast<std::size_t>(L.ambient), 0); // pad to degrees 0..n
    return b;
}

inline long long euler_projective_complement(const IntersectionLattice& L) {
    std::vector<long long> b = betti_projective(L);
    long long chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0) ? b[k] : -b[k];
    return chi;
}

inline long long euler_projective_complement(const Arrangement& A) {
    return euler_projective_complement(build_lattice(A));
}

/// deg(grad Q) read off the lattice: the top Betti number b_n of the
/// projective complement. Zero exactly when the arrangement is non-essential.
inline long long grad_degree_lattice(const IntersectionLattice& L) {
    return betti_projective(L).back();
}

inline long long grad_degree_arrangement(const Arrangement& A) {
    return grad_degree_lattice(build_lattice(A));
}

inline EulerReport lemma5_check(const IntersectionLattice& L) {
    EulerReport r;
    r.chi_projective_complement = euler_projective_complement(L);
    r.chi_section = euler_projective_complement(truncate_generic_section(L, 1));
    r.chi_difference = r.chi_projective_complement - r.chi_section;
    r.top_betti = grad_degree_lattice(L);
    return r;
}

inline EulerReport lemma5_check(const Arrangement& A) { return lemma5_check(build_lattice(A)); }

/// Terms of chi(D(Q)) = sum_{i=0..n} (-1)^{n-i} deg(grad Q^{(i)}), where
/// Q^{(i)} is the restriction to a generic codimension-i subspace and the
/// i = n degree is 1 by convention.
inline std::vector<SectionTerm> corollary2_terms(const IntersectionLattice& L) {
    const int n = L.ambient - 1;
    std::vector<SectionTerm> terms;
    for (int i = 0; i <= n; ++i) {
        SectionTerm t;
        t.i = i;
        t.ambient = L.ambient - i;
        if (i == n) {
            t.grad_degree = 1;
        } else {
            t.grad_degree = grad_degree_lattice(truncate_generic_section(L, i));
        }
        t.term = ((n - i) % 2 == 0) ? t.grad_degree : -t.grad_degree;
        terms.push_back(t);
    }
    return terms;
}

inline long long corollary2_sum(const IntersectionLattice& L) {
    long long s = 0;
    for (const auto& t : corollary2_terms(L)) s += t.term;
    return s;
}

inline long long corollary2_sum(const Arrangement& A) { return corollary2_sum(build_lattice(A)); }

inline CWModel minimal_cw_model(const IntersectionLattice& L) {
    CWModel m;
    m.cells = betti_projective(L);
    for (std::size_t k = 0; k < m.cells.size(); ++k)
        m.euler += (k % 2 == 0) ? m.cells[k] : -m.cells[k];
    return m;
}

inline CWModel minimal_cw_model(const Arrangement& A) { return minimal_cw_model(build_lattice(A)); }

/// Polar invariant P(F_1) of the Milnor fiber of Q: d * deg(grad Q).
inline long long polar_invariant(const Arrangement& A, const IntersectionLattice& L) {
    return static_cast<long long>(A.d()) * grad_degree_lattice(L);
}

inline long long polar_invariant(const Arrangement& A) {
    return polar_invariant(A, build_lattice(A));
}

} // namespace arrtop
