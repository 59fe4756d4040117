#pragma once

// Shared fixtures: the essential arrangement suite used by the cross-oracle
// identities, non-essential cones, and the affine region fixtures.

#include <string>
#include <utility>
#include <vector>

#include "arrtop/generators.hpp"
#include "arrtop/regions.hpp"

namespace suite {

inline constexpr std::uint64_t kSeed = 12345;

struct Named {
    std::string name;
    arrtop::Arrangement A;
};

/// Eleven essential complexified-real arrangements, n <= 3, d <= 10.
inline const std::vector<Named>& essential_suite() {
    static const std::vector<Named> s = [] {
        std::vector<Named> v;
        for (int n = 1; n <= 3; ++n)
            v.push_back({"boolean:" + std::to_string(n), arrtop::boolean_arrangement(n)});
        for (int d = 3; d <= 7; ++d)
            v.push_back({"generic-lines:" + std::to_string(d),
                         arrtop::generic_lines(d, kSeed + static_cast<std::uint64_t>(d))});
        v.push_back({"essential-braid:4", arrtop::essential_braid(4)});
        v.push_back({"random-lines:5", arrtop::random_lines(5, kSeed + 100)});
        v.push_back({"random-lines:6", arrtop::random_lines(6, kSeed + 200)});
        return v;
    }();
    return s;
}

/// Non-essential cones exercising the degree-0 path.
inline const std::vector<Named>& cone_suite() {
    static const std::vector<Named> s = [] {
        std::vector<Named> v;
        v.push_back({"braid:3", arrtop::braid(3)});
        v.push_back({"braid:4", arrtop::braid(4)});
        v.push_back({"single:2", arrtop::make_arrangement(
                                      2, {{arrtop::Rational(1), arrtop::Rational(2),
                                           arrtop::Rational(-1)}})});
        return v;
    }();
    return s;
}

struct NamedAffine {
    std::string name;
    arrtop::AffineArrangement A;
    long long regions = -1; // -1: no hand value, agreement-only fixture
    long long bounded = -1;
};

inline arrtop::AffineArrangement aff(int n, const std::vector<std::vector<int>>& rows) {
    std::vector<arrtop::AffineHyperplane> planes;
    for (const auto& r : rows) {
        arrtop::AffineHyperplane h;
        for (std::size_t j = 0; j + 1 < r.size(); ++j) h.normal.push_back(arrtop::Rational(r[j]));
        h.offset = arrtop::Rational(r.back());
        planes.push_back(std::move(h));
    }
    return arrtop::make_affine_arrangement(n, std::move(planes));
}

/// Region fixtures with parallels and degenerate pencils; rows are
/// `a1 .. an b` for a.x = b. Tangent lines to the parabola y = x^2 at
/// x = t give 2t x - y = t^2: pairwise non-parallel, never three concurrent.
inline const std::vector<NamedAffine>& affine_suite() {
    static const std::vector<NamedAffine> s = [] {
        std::vector<NamedAffine> v;
        v.push_back({"point-R1", aff(1, {{1, 0}}), 2, 0});
        v.push_back({"two-points-R1", aff(1, {{1, 0}, {1, 1}}), 3, 1});
        v.push_back({"three-points-R1", aff(1, {{1, 0}, {1, 1}, {1, -1}}), 4, 2});
        v.push_back({"axes-R2", aff(2, {{1, 0, 0}, {0, 1, 0}}), 4, 0});
        v.push_back({"triangle", aff(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}), 7, 1});
        v.push_back({"five-tangent-lines",
                     aff(2, {{0, -1, 0}, {2, -1, 1}, {-2, -1, 1}, {4, -1, 4}, {-4, -1, 4}}),
                     16, 6});
        v.push_back({"two-parallel", aff(2, {{1, 0, 0}, {1, 0, 1}}), 3, 0});
        v.push_back({"three-parallel", aff(2, {{1, 0, 0}, {1, 0, 1}, {1, 0, 2}}), 4, 0});
        v.push_back({"pencil-4", aff(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}}), 8, 0});
        v.push_back({"pencil-3-transversal",
                     aff(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 1}}), 9, 1});
        v.push_back({"square", aff(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 1, 1}}), 9, 1});
        v.push_back({"strip-and-two",
                     aff(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {1, 1, 3}}), 10, 2});
        v.push_back({"coordinate-planes-R3",
                     aff(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}), 8, 0});
        v.push_back({"simplex-R3",
                     aff(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 1}}), 15, 1});
        v.push_back({"parallel-planes-R3",
                     aff(3, {{1, 0, 0, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}), 12, 0});
        v.push_back({"pencil-plus-parallel",
                     aff(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {1, 0, 2}}), -1, -1});
        return v;
    }();
    return s;
}

} // namespace suite
