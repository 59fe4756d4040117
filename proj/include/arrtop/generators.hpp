#pragma once

#include <random>
#include <string>

#include "arrtop/arrangement.hpp"

namespace arrtop {

/// Coordinate hyperplanes x_0..x_n: D(Q) is the n-torus, grad degree 1.
inline Arrangement boolean_arrangement(int n) {
    if (n < 1 || n > 6) throw input_error("boolean: n in 1..6");
    std::vector<VecQ> forms;
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) {
        VecQ f(static_cast<std::size_t>(n) + 1, Rational(0));
        f[static_cast<std::size_t>(i)] = 1;
        forms.push_back(std::move(f));
        labels.push_back("x" + std::to_string(i));
    }
    return make_arrangement(n, std::move(forms), std::move(labels));
}

/// Braid cone x_i - x_j in C^k: rank k-1, never essential.
inline Arrangement braid(int k) {
    if (k < 2 || k > 7) throw input_error("braid: k in 2..7");
    std::vector<VecQ> forms;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            VecQ f(static_cast<std::size_t>(k), Rational(0));
            f[static_cast<std::size_t>(i)] = 1;
            f[static_cast<std::size_t>(j)] = -1;
            forms.push_back(std::move(f));
            labels.push_back("x" + std::to_string(i) + "-x" + std::to_string(j));
        }
    return make_arrangement(k - 1, std::move(forms), std::move(labels));
}

/// Braid cone with the diagonal quotiented away (x_{k-1} = 0 slice): same
/// lattice, but essential of rank k-1 in C^{k-1}.
inline Arrangement essential_braid(int k) {
    if (k < 3 || k > 7) throw input_error("essential-braid: k in 3..7");
    std::vector<VecQ> forms;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            VecQ f(static_cast<std::size_t>(k) - 1, Rational(0));
            if (i < k - 1) f[static_cast<std::size_t>(i)] = 1;
            if (j < k - 1) f[static_cast<std::size_t>(j)] = -1;
            forms.push_back(std::move(f));
        }
    return make_arrangement(k - 2, std::move(forms));
}

/// d distinct points in the projective line.
inline Arrangement generic_points(int d) {
    if (d < 1 || d > 20) throw input_error("generic-points: d in 1..20");
    std::vector<VecQ> forms;
    forms.push_back({Rational(0), Rational(1)});
    for (int i = 0; i + 1 < d; ++i) forms.push_back({Rational(1), Rational(i)});
    return make_arrangement(1, std::move(forms));
}

namespace detail {

inline Arrangement random_lines_attempt(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<VecQ> forms;
    int guard = 0;
    while (static_cast<int>(forms.size()) < d) {
        if (++guard > 1000) throw internal_error("random lines: rejection loop stuck");
        VecQ f{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
        if (is_zero_vector(f)) continue;
        bool dup = false;
        for (const auto& g : forms)
            if (proportional(f, g)) {
                dup = true;
                break;
            }
        if (!dup) forms.push_back(std::move(f));
    }
    return make_arrangement(2, std::move(forms));
}

} // namespace detail

/// d random rational lines in P^2, redrawn until the lattice profile is the
/// generic one (1, d, C(d,2), 1): all intersection points simple.
inline Arrangement generic_lines(int d, std::uint64_t seed) {
    if (d < 3 || d > 11) throw input_error("generic-lines: d in 3..11");
    std::mt19937_64 rng(seed);
    const std::vector<long long> want{1, d, static_cast<long long>(d) * (d - 1) / 2, 1};
    for (int attempt = 0; attempt < 200; ++attempt) {
        Arrangement A = detail::random_lines_attempt(d, rng);
        if (build_lattice(A).profile() == want) return A;
    }
    throw internal_error("generic_lines: no generic draw in 200 attempts");
}

/// d random rational lines in P^2 with no genericity enforcement beyond
/// validity and essentiality.
inline Arrangement random_lines(int d, std::uint64_t seed) {
    if (d < 3 || d > 12) throw input_error("random-lines: d in 3..12");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Arrangement A = detail::random_lines_attempt(d, rng);
        if (is_essential(A)) return A;
    }
    throw internal_error("random_lines: no essential draw in 200 attempts");
}

/// Generator spec "name:k", e.g. boolean:3, generic-lines:5, braid:4.
inline Arrangement parse_gen_spec(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    if (colon == std::string::npos || colon + 1 >= spec.size())
        throw input_error("generator spec must be name:<k>");
    const std::string name = spec.substr(0, colon);
    int k = 0;
    try {
        std::size_t used = 0;
        k = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw input_error("generator spec must be name:<k>, got '" + spec + "'");
    }
    if (name == "boolean") return boolean_arrangement(k);
    if (name == "braid") return braid(k);
    if (name == "essential-braid") return essential_braid(k);
    if (name == "generic-points") return generic_points(k);
    if (name == "generic-lines") return generic_lines(k, seed);
    if (name == "random-lines") return random_lines(k, seed);
    throw input_error("unknown generator '" + name + "'");
}

} // namespace arrtop
