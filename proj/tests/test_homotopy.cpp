#include <catch2/catch_amalgamated.hpp>

#include "arrtop/homotopy.hpp"
#include "arrtop/topology.hpp"
#include "suite.hpp"

using namespace arrtop;

namespace {

long long must_count(const HomotopyResult& r) {
    REQUIRE(r.distinct_solutions.has_value());
    return *r.distinct_solutions;
}

} // namespace

TEST_CASE("binary product form has a single fiber point", "[homotopy]") {
    HomotopyResult r = grad_fiber_count(parse_polynomial("x0*x1"), suite::kSeed);
    CHECK(r.raw_paths == 1);
    CHECK(must_count(r) == 1);
    CHECK(r.max_residual < 1e-9);
}

TEST_CASE("Fermat forms meet the Bezout ceiling", "[homotopy]") {
    struct Case {
        const char* poly;
        int n, d;
    };
    for (const Case& c : {Case{"x0^3 + x1^3", 1, 3}, Case{"x0^4 + x1^4", 1, 4},
                          Case{"x0^3 + x1^3 + x2^3", 2, 3}}) {
        INFO(c.poly);
        HomotopyResult r = grad_fiber_count(parse_polynomial(c.poly), suite::kSeed);
        long long want = 1;
        for (int i = 0; i < c.n; ++i) want *= c.d - 1;
        CHECK(must_count(r) == want);
        CHECK(r.max_residual < 1e-9);
    }
}

TEST_CASE("arrangement products match the combinatorial degree", "[homotopy]") {
    for (const auto& [name, A] : suite::essential_suite()) {
        if (A.n > 2 || A.d() > 6 || A.d() < 2) continue;
        INFO(name);
        HomogeneousPoly Q = product_of_linear_forms(A.forms);
        HomotopyResult r = grad_fiber_count(Q, suite::kSeed);
        CHECK(must_count(r) == grad_degree_arrangement(A));
        CHECK(r.max_residual < 1e-9);
        long long ceiling = 1;
        for (int i = 0; i < A.n; ++i) ceiling *= Q.degree - 1;
        CHECK(must_count(r) <= ceiling);
    }
}

TEST_CASE("non-essential cone has an empty generic fiber", "[homotopy]") {
    HomogeneousPoly Q = product_of_linear_forms(braid(3).forms);
    HomotopyResult r = grad_fiber_count(Q, suite::kSeed);
    CHECK(must_count(r) == 0);
    CHECK(r.converged == r.discarded_on_V_h);
}

TEST_CASE("identical seeds give identical results", "[homotopy]") {
    HomogeneousPoly Q = product_of_linear_forms(generic_lines(4, 99).forms);
    HomotopyResult a = grad_fiber_count(Q, 777);
    HomotopyResult b = grad_fiber_count(Q, 777);
    CHECK(a.raw_paths == b.raw_paths);
    CHECK(a.converged == b.converged);
    CHECK(a.discarded_diverged == b.discarded_diverged);
    CHECK(a.discarded_on_V_h == b.discarded_on_V_h);
    CHECK(a.distinct_solutions == b.distinct_solutions);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.flags == b.flags);
}

TEST_CASE("count is stable across three seeds", "[homotopy]") {
    HomogeneousPoly Q = product_of_linear_forms(generic_lines(4, 99).forms);
    StableCount sc = grad_degree_homotopy_stable(Q, suite::kSeed);
    REQUIRE(sc.count.has_value());
    CHECK(*sc.count == 3);
    CHECK(sc.runs.size() == 3);
}

TEST_CASE("path bookkeeping is conserved", "[homotopy]") {
    for (const char* p : {"x0*x1", "x0^3 + x1^3 + x2^3"}) {
        HomotopyResult r = grad_fiber_count(parse_polynomial(p), suite::kSeed);
        CHECK(r.raw_paths == r.converged + r.discarded_diverged + r.failed);
        CHECK(r.discarded_on_V_h <= r.converged);
        if (r.distinct_solutions) CHECK(*r.distinct_solutions <= r.converged);
    }
}

TEST_CASE("input gates", "[homotopy]") {
    CHECK_THROWS_AS(grad_fiber_count(parse_polynomial("x0^2*x1"), suite::kSeed), input_error);
    CHECK_THROWS_AS(grad_fiber_count(parse_polynomial("x0 + x1"), suite::kSeed), input_error);
    CHECK_THROWS_AS(
        grad_fiber_count(parse_polynomial("x0^2+x1^2+x2^2+x3^2+x4^2", 5), suite::kSeed),
        input_error);
}

TEST_CASE("numeric polar invariant", "[homotopy]") {
    CHECK(polar_invariant_numeric(parse_polynomial("x0*x1"), suite::kSeed) == 2);
    CHECK(polar_invariant_numeric(parse_polynomial("x0^3+x1^3+x2^3"), suite::kSeed) == 12);
    Arrangement A = generic_lines(4, 99);
    HomogeneousPoly Q = product_of_linear_forms(A.forms);
    CHECK(polar_invariant_numeric(Q, suite::kSeed) == polar_invariant(A));
}
