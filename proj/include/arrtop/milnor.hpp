#pragma once

#include <map>

#include "arrtop/topology.hpp"

namespace arrtop {

/// Morse data for the Milnor fiber F of a generic degree-e polynomial
/// relative to N = F intersected with the arrangement.
struct MilnorReport {
    int d = 0;
    int e = 0;
    long long chi_F_Q = 0;      // Euler characteristic of the Milnor fiber of Q
    long long morse_count = 0;  // |C(g)| = b_n(F, F cap N)
    std::map<int, long long> relative_betti; // q -> b_q(F, F cap N), q = 0..n
};

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

/// chi of the Milnor fiber {Q = 1}: the fiber covers D(Q) with d sheets.
inline long long euler_milnor_fiber_arrangement(const Arrangement& A,
                                                const IntersectionLattice& L) {
    return static_cast<long long>(A.d()) * euler_projective_complement(L);
}

inline long long euler_milnor_fiber_arrangement(const Arrangement& A) {
    return euler_milnor_fiber_arrangement(A, build_lattice(A));
}

/// chi of a smooth degree-e hypersurface in P^n: n + 1 + ((1-e)^{n+1} - 1)/e.
/// The division is exact since (1-e)^{n+1} = 1 (mod e).
inline long long euler_smooth_hypersurface(int e, int n) {
    if (e < 1 || n < 1) throw input_error("euler_smooth_hypersurface: need e >= 1, n >= 1");
    const long long p = ipow(1 - static_cast<long long>(e), n + 1);
    if ((p - 1) % e != 0) throw internal_error("euler_smooth_hypersurface: division not exact");
    return n + 1 + (p - 1) / e;
}

/// Number of Morse critical points |C(g)| attached in dimension n:
/// (-1)^n sum_X mu(X) (1 - (1-e)^{dim X}), summed over the whole lattice.
/// 1 - (1-e)^m is chi of the degree-e Milnor fiber in C^m.
inline long long morse_cell_count(const IntersectionLattice& L, int e) {
    if (e < 1) throw input_error("morse_cell_count: need e >= 1");
    const int n = L.ambient - 1;
    long long s = 0;
    for (std::size_t i = 0; i < L.flats.size(); ++i)
        s += L.mu[i] * (1 - ipow(1 - static_cast<long long>(e), L.dim(i)));
    long long count = (n % 2 == 0) ? s : -s;
    if (count < 0) throw internal_error("morse_cell_count: negative cell count");
    return count;
}

inline long long morse_cell_count(const Arrangement& A, int e) {
    return morse_cell_count(build_lattice(A), e);
}

/// Second, Mobius-free route to |C(g)|: (-1)^n chi(F minus N) with
/// chi(F minus N) = e * (chi(D(f)) - chi(D(f) cap N)), the latter computed by
/// top-down stratification of N over the lattice. Each projectivized flat
/// P(X) of dimension m-1 meets D(f) in chi = (1 - (1-e)^m)/e.
inline long long morse_cell_count_strata(const IntersectionLattice& L, int e) {
    if (e < 1) throw input_error("morse_cell_count_strata: need e >= 1");
    const int n = L.ambient - 1;
    const auto chi_open_flat = [&](int m) { // chi(P(X) cap D(f)), m = dim X
        const long long p = 1 - ipow(1 - static_cast<long long>(e), m);
        if (p % e != 0) throw internal_error("morse_cell_count_strata: division not exact");
        return p / e;
    };
    // strata[i]: chi of (P(X_i) minus all smaller flats) cap D(f)
    std::vector<long long> strata(L.flats.size(), 0);
    long long chi_N_open = 0;
    for (std::size_t i = L.flats.size(); i-- > 0;) {
        if (L.flats[i].rank == 0) continue;
        long long s = chi_open_flat(L.dim(i));
        for (std::size_t j = i + 1; j < L.flats.size(); ++j)
            if (L.leq(i, j) && L.flats[j].members != L.flats[i].members) s -= strata[j];
        strata[i] = s;
        chi_N_open += s;
    }
    const long long chi_Df = (n + 1) - euler_smooth_hypersurface(e, n);
    const long long chi_F_minus_N = static_cast<long long>(e) * (chi_Df - chi_N_open);
    return (n % 2 == 0) ? chi_F_minus_N : -chi_F_minus_N;
}

inline long long morse_cell_count_strata(const Arrangement& A, int e) {
    return morse_cell_count_strata(build_lattice(A), e);
}

/// Bundles the Milnor-fiber data; aborts loudly if the two independent
/// derivations of |C(g)| disagree.
inline MilnorReport milnor_report(const Arrangement& A, const IntersectionLattice& L, int e) {
    MilnorReport r;
    r.d = A.d();
    r.e = e;
    r.chi_F_Q = euler_milnor_fiber_arrangement(A, L);
    r.morse_count = morse_cell_count(L, e);
    if (morse_cell_count_strata(L, e) != r.morse_count)
        throw internal_error("milnor_report: independent Morse-count routes disagree");
    for (int q = 0; q <= A.n; ++q) r.relative_betti[q] = (q == A.n) ? r.morse_count : 0;
    return r;
}

inline MilnorReport milnor_report(const Arrangement& A, int e) {
    return milnor_report(A, build_lattice(A), e);
}

} // namespace arrtop
