#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "arrtop/matrix.hpp"
#include "arrtop/polynomial.hpp"

using namespace arrtop;

TEST_CASE("rational parsing and normalization", "[core]") {
    CHECK(parse_rational("3/2") == Rational(3) / 2);
    CHECK(parse_rational("-4/6") == Rational(-2) / 3);
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("x"), input_error);
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
}

TEST_CASE("vector helpers", "[core]") {
    CHECK(proportional({Rational(1), Rational(2)}, {Rational(2), Rational(4)}));
    CHECK(proportional({Rational(0), Rational(3)}, {Rational(0), Rational(-1)}));
    CHECK_FALSE(proportional({Rational(1), Rational(2)}, {Rational(2), Rational(5)}));
    CHECK_FALSE(proportional({Rational(1), Rational(0)}, {Rational(0), Rational(1)}));
    CHECK(dot({Rational(1), Rational(2)}, {Rational(3), Rational(4)}) == 11);
}

TEST_CASE("rref on the reference matrices", "[core]") {
    SECTION("identity") {
        auto [rank, red] = rref(RatMatrix::identity(3));
        CHECK(rank == 3);
        CHECK(red == RatMatrix::identity(3));
    }
    SECTION("duplicate rows") {
        RatMatrix m = RatMatrix::from_rows(
            {{Rational(1), Rational(1), Rational(0)}, {Rational(1), Rational(1), Rational(0)}});
        CHECK(rref(m).first == 1);
    }
    SECTION("dependent triple") {
        RatMatrix m = RatMatrix::from_rows({{Rational(1), Rational(-1), Rational(0)},
                                            {Rational(1), Rational(0), Rational(-1)},
                                            {Rational(0), Rational(1), Rational(-1)}});
        CHECK(rref(m).first == 2);
    }
}

TEST_CASE("rref rank is row-order independent and basis is canonical", "[core]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VecQ> rows;
        for (int i = 0; i < 4; ++i) {
            VecQ r;
            for (int j = 0; j < 5; ++j) r.push_back(Rational(coef(rng)));
            rows.push_back(std::move(r));
        }
        auto base = rowspace_basis(RatMatrix::from_rows(rows));
        for (int sh = 0; sh < 4; ++sh) {
            std::shuffle(rows.begin(), rows.end(), rng);
            auto again = rowspace_basis(RatMatrix::from_rows(rows));
            CHECK(again == base);
        }
    }
}

TEST_CASE("kernel basis annihilates the rows", "[core]") {
    RatMatrix m = RatMatrix::from_rows(
        {{Rational(1), Rational(2), Rational(3)}, {Rational(0), Rational(1), Rational(1)}});
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        VecQ row(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
        CHECK(dot(row, kb[0]) == 0);
    }
}

TEST_CASE("in_rowspace checks span membership", "[core]") {
    RatMatrix b = rowspace_basis(RatMatrix::from_rows(
        {{Rational(1), Rational(0), Rational(-1)}, {Rational(0), Rational(1), Rational(-1)}}));
    CHECK(in_rowspace(b, {Rational(1), Rational(-1), Rational(0)}));
    CHECK(in_rowspace(b, {Rational(2), Rational(3), Rational(-5)}));
    CHECK_FALSE(in_rowspace(b, {Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("polynomial parsing", "[core]") {
    HomogeneousPoly p = parse_polynomial("x0^3 + x1^3 + x2^3");
    CHECK(p.nvars == 3);
    CHECK(p.degree == 3);
    CHECK(p.terms.size() == 3);

    HomogeneousPoly q = parse_polynomial("3/2*x0*x1 - x1^2");
    CHECK(q.degree == 2);
    CHECK(q.terms.at({1, 1}) == Rational(3) / 2);
    CHECK(q.terms.at({0, 2}) == -1);

    CHECK(parse_polynomial("(x0+x1)*(x0-x1)") == parse_polynomial("x0^2 - x1^2"));
    CHECK_THROWS_AS(parse_polynomial("x0 + x0^2"), input_error); // not homogeneous
    CHECK_THROWS_AS(parse_polynomial("x0 - x0"), input_error);   // zero polynomial
    CHECK_THROWS_AS(parse_polynomial("x0 + "), input_error);
}

TEST_CASE("partial derivatives on the reference cases", "[core]") {
    HomogeneousPoly p = parse_polynomial("x0*x1");
    auto d0 = partial_derivative(p, 0);
    REQUIRE(d0.has_value());
    CHECK(*d0 == parse_polynomial("x1", 2));

    auto d1 = partial_derivative(parse_polynomial("x0^3 + x1^3"), 1);
    REQUIRE(d1.has_value());
    CHECK(*d1 == parse_polynomial("3*x1^2", 2));

    auto d2 = partial_derivative(parse_polynomial("x0^2*x1", 3), 2);
    CHECK_FALSE(d2.has_value()); // absent variable: formal zero

    CHECK_THROWS_AS(partial_derivative(p, 5), input_error);
}

TEST_CASE("evaluation on the reference cases", "[core]") {
    CHECK(evaluate(parse_polynomial("x0*x1"), VecQ{Rational(2), Rational(3)}) == 6);
    CHECK(evaluate(parse_polynomial("x0^3+x1^3"), VecQ{Rational(1), Rational(-1)}) == 0);
    CHECK(evaluate(parse_polynomial("x0^2*x1"), VecQ{Rational(1) / 2, Rational(4)}) == 1);
    CHECK_THROWS_AS(evaluate(parse_polynomial("x0*x1"), VecQ{Rational(1)}), input_error);
}

namespace {

HomogeneousPoly random_poly(std::mt19937_64& rng, int nvars, int degree) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::map<ExpVec, Rational> terms;
    for (int tries = 0; tries < 12; ++tries) {
        ExpVec e(static_cast<std::size_t>(nvars), 0);
        int left = degree;
        for (int v = 0; v + 1 < nvars; ++v) {
            std::uniform_int_distribution<int> part(0, left);
            e[static_cast<std::size_t>(v)] = part(rng);
            left -= e[static_cast<std::size_t>(v)];
        }
        e[static_cast<std::size_t>(nvars) - 1] = left;
        terms[e] += coef(rng);
    }
    terms[ExpVec{degree, 0, 0}] += 1; // ensure nonzero
    std::map<ExpVec, Rational> clean;
    for (auto& [e, c] : terms)
        if (c != 0) clean[e] = c;
    return HomogeneousPoly::from_terms(nvars, clean);
}

HomogeneousPoly times_var(const HomogeneousPoly& p, int v) {
    std::map<ExpVec, Rational> t;
    for (const auto& [e, c] : p.terms) {
        ExpVec e2 = e;
        ++e2[static_cast<std::size_t>(v)];
        t[e2] = c;
    }
    return HomogeneousPoly::from_terms(p.nvars, t);
}

} // namespace

TEST_CASE("homogeneity of evaluation is exact", "[core]") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        HomogeneousPoly p = random_poly(rng, 3, 4);
        VecQ v{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
        Rational t = Rational(coef(rng)) + Rational(1) / 2;
        VecQ tv = v;
        for (auto& x : tv) x *= t;
        Rational scale = 1;
        for (int k = 0; k < p.degree; ++k) scale *= t;
        CHECK(evaluate(p, tv) == scale * evaluate(p, v));
    }
}

TEST_CASE("Euler identity as an exact polynomial identity", "[core]") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        HomogeneousPoly p = random_poly(rng, 3, 5);
        std::map<ExpVec, Rational> acc;
        for (int v = 0; v < p.nvars; ++v) {
            auto dv = partial_derivative(p, v);
            if (!dv) continue;
            HomogeneousPoly xv = times_var(*dv, v);
            for (const auto& [e, c] : xv.terms) acc[e] += c;
        }
        std::map<ExpVec, Rational> expect;
        for (const auto& [e, c] : p.terms) expect[e] = c * p.degree;
        for (auto it = acc.begin(); it != acc.end();)
            it = (it->second == 0) ? acc.erase(it) : std::next(it);
        CHECK(acc == expect);
    }
}

TEST_CASE("is_reduced on the reference cases", "[core]") {
    CHECK(is_reduced(parse_polynomial("x0*x1")));
    CHECK_FALSE(is_reduced(parse_polynomial("x0^2*x1")));
    CHECK(is_reduced(parse_polynomial("(x0+x1)*(x0-x1)")));
}

TEST_CASE("is_reduced never passes a constructed square", "[core]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        HomogeneousPoly q = random_poly(rng, 3, 2);
        HomogeneousPoly r = random_poly(rng, 3, 1);
        // q^2 * r
        std::map<ExpVec, Rational> sq;
        for (const auto& [e1, c1] : q.terms)
            for (const auto& [e2, c2] : q.terms) {
                ExpVec e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                sq[e] += c1 * c2;
            }
        std::map<ExpVec, Rational> full;
        for (const auto& [e1, c1] : sq)
            for (const auto& [e2, c2] : r.terms) {
                ExpVec e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                full[e] += c1 * c2;
            }
        for (auto it = full.begin(); it != full.end();)
            it = (it->second == 0) ? full.erase(it) : std::next(it);
        HomogeneousPoly sqr = HomogeneousPoly::from_terms(3, full);
        CHECK_FALSE(is_reduced(sqr, 8, 1000 + static_cast<std::uint64_t>(trial)));
    }
}

TEST_CASE("product of linear forms", "[core]") {
    std::vector<VecQ> forms{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK(product_of_linear_forms(forms) == parse_polynomial("x0*x1"));
    std::vector<VecQ> forms3{{Rational(1), Rational(0), Rational(0)},
                             {Rational(0), Rational(1), Rational(0)},
                             {Rational(0), Rational(0), Rational(1)},
                             {Rational(1), Rational(1), Rational(1)}};
    HomogeneousPoly Q = product_of_linear_forms(forms3);
    CHECK(Q.degree == 4);
    CHECK(Q == parse_polynomial("x0*x1*x2*(x0+x1+x2)"));
}
