#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "arrtop/io.hpp"
#include "arrtop/verify.hpp"
#include "suite.hpp"

using namespace arrtop;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

Arrangement parse(const std::string& text) {
    std::istringstream in(text);
    return parse_arrangement_stream(in);
}

AffineArrangement parse_aff(const std::string& text) {
    std::istringstream in(text);
    return parse_affine_stream(in);
}

} // namespace

TEST_CASE("arrangement files parse with comments and fractions", "[io]") {
    Arrangement A = parse("# boolean n=2\n2 3\n1 0 0\n0 1 0\n\n0 0 1\n");
    CHECK(A.n == 2);
    CHECK(A.d() == 3);
    CHECK(A.forms[2] == std::vector<Rational>{0, 0, 1});

    Arrangement B = parse("1 2\n1/2 -3/4\n0 2/3\n");
    CHECK(B.forms[0] == std::vector<Rational>{Rational(1, 2), Rational(-3, 4)});
}

TEST_CASE("arrangement parse errors carry line numbers", "[io]") {
    CHECK_THROWS_MATCHES(parse(""), input_error, MessageMatches(ContainsSubstring("empty")));
    CHECK_THROWS_MATCHES(parse("2\n"), input_error, MessageMatches(ContainsSubstring("header")));
    CHECK_THROWS_MATCHES(parse("1 2\n1 0\n"), input_error,
                         MessageMatches(ContainsSubstring("form rows")));
    CHECK_THROWS_MATCHES(parse("1 1\n1 0 0\n"), input_error,
                         MessageMatches(ContainsSubstring("line 2")));
    CHECK_THROWS_MATCHES(parse("1 1\n1 x\n"), input_error,
                         MessageMatches(ContainsSubstring("line 2")));
    CHECK_THROWS_MATCHES(parse("1 1\n1/0 1\n"), input_error,
                         MessageMatches(ContainsSubstring("line 2")));
    CHECK_THROWS_MATCHES(parse("1 2\n1 1\n2 2\n"), input_error,
                         MessageMatches(ContainsSubstring("1,2")));
    CHECK_THROWS_MATCHES(parse("1 1\n0 0\n"), input_error,
                         MessageMatches(ContainsSubstring("zero")));
    CHECK_THROWS_AS(parse_arrangement_file("/no/such/file.arr"), input_error);
}

TEST_CASE("affine files parse", "[io]") {
    AffineArrangement A = parse_aff("# unit square\n2 4\n1 0 0\n1 0 1\n0 1 0\n0 1 1\n");
    CHECK(A.n == 2);
    CHECK(A.d() == 4);
    CHECK(A.hyperplanes[1].normal == std::vector<Rational>{1, 0});
    CHECK(A.hyperplanes[1].offset == Rational(1));
    CHECK_THROWS_MATCHES(parse_aff("1 2\n1 0\n2 0\n"), input_error,
                         MessageMatches(ContainsSubstring("1,2")));
    // Parallel translates are distinct hyperplanes, not duplicates.
    CHECK(parse_aff("1 2\n1 0\n1 1\n").d() == 2);
}

TEST_CASE("invariants JSON matches the wire schema exactly", "[io]") {
    Arrangement A = boolean_arrangement(2);
    nlohmann::json j = invariants_json(A, build_lattice(A));

    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    CHECK(keys == std::vector<std::string>{"betti", "chi", "corollary2", "grad_degree", "lemma5",
                                           "polar_invariant"});

    CHECK(j["chi"] == 0);
    CHECK(j["betti"] == nlohmann::json::array({1, 2, 1}));
    CHECK(j["grad_degree"] == 1);
    CHECK(j["polar_invariant"] == 3);
    CHECK(j["corollary2"]["terms"] == nlohmann::json::array({1, -2, 1}));
    CHECK(j["corollary2"]["sum"] == 0);
    CHECK(j["lemma5"]["lhs"] == j["lemma5"]["rhs"]);
    CHECK(j["lemma5"]["rhs"] == 1);
}

TEST_CASE("invariants JSON for a pencil of three points", "[io]") {
    Arrangement A = generic_points(3);
    nlohmann::json j = invariants_json(A, build_lattice(A));
    CHECK(j["chi"] == -1);
    CHECK(j["betti"] == nlohmann::json::array({1, 2}));
    CHECK(j["grad_degree"] == 2);
    CHECK(j["corollary2"]["terms"] == nlohmann::json::array({-2, 1}));
    CHECK(j["corollary2"]["sum"] == -1);
}

TEST_CASE("lattice JSON lists flats by rank with members", "[io]") {
    nlohmann::json j = lattice_json(build_lattice(boolean_arrangement(2)));
    CHECK(j["ambient"] == 3);
    CHECK(j["nforms"] == 3);
    CHECK(j["essential"] == true);
    CHECK(j["profile"] == nlohmann::json::array({1, 3, 3, 1}));
    REQUIRE(j["flats"].size() == 8);
    CHECK(j["flats"][0]["rank"] == 0);
    CHECK(j["flats"][0]["members"] == nlohmann::json::array());
    CHECK(j["flats"][0]["mu"] == 1);
    nlohmann::json top = j["flats"].back();
    CHECK(top["rank"] == 3);
    CHECK(top["dim"] == 0);
    CHECK(top["members"] == nlohmann::json::array({0, 1, 2}));
    CHECK(top["mu"] == -1);
}

TEST_CASE("sections JSON mirrors the signed telescope", "[io]") {
    nlohmann::json j = sections_json(build_lattice(generic_points(3)));
    REQUIRE(j["sections"].size() == 2);
    CHECK(j["sections"][0]["i"] == 0);
    CHECK(j["sections"][0]["grad_degree"] == 2);
    CHECK(j["sections"][0]["term"] == -2);
    CHECK(j["sections"][0]["betti"] == nlohmann::json::array({1, 2}));
    CHECK(j["sections"][1]["grad_degree"] == 1);
    CHECK(!j["sections"][1].contains("betti"));
    CHECK(j["sum"] == -1);
    CHECK(j["chi"] == -1);
}

TEST_CASE("milnor JSON", "[io]") {
    nlohmann::json j = milnor_json(milnor_report(boolean_arrangement(1), 1));
    CHECK(j["d"] == 2);
    CHECK(j["e"] == 1);
    CHECK(j["chi_F_Q"] == 0);
    CHECK(j["morse_count"] == 1);
    CHECK(j["relative_betti"]["1"] == 1);
    CHECK(j["relative_betti"]["0"] == 0);
}

TEST_CASE("regions JSON", "[io]") {
    RegionReport r = enumerate_regions(suite::affine_suite()[4].A, true); // triangle
    nlohmann::json j = regions_json(r, true);
    CHECK(j["regions"] == 7);
    CHECK(j["bounded"] == 1);
    CHECK(j["essential"] == true);
    CHECK(j["sign_vectors"].size() == 7);
    CHECK(!regions_json(r).contains("sign_vectors"));
}

TEST_CASE("homotopy JSON uses null for an unset count", "[io]") {
    HomotopyResult r;
    r.raw_paths = 4;
    r.converged = 3;
    r.discarded_diverged = 1;
    r.flags = {"cluster_ambiguity"};
    nlohmann::json j = homotopy_json(r);
    CHECK(j["distinct_solutions"].is_null());
    CHECK(j["flags"] == nlohmann::json::array({"cluster_ambiguity"}));
    r.distinct_solutions = 2;
    CHECK(homotopy_json(r)["distinct_solutions"] == 2);
}

TEST_CASE("verify JSON reports per-check results", "[io]") {
    VerifyReport rep = run_verify(boolean_arrangement(2), VerifyOptions{});
    CHECK(rep.overall);
    nlohmann::json j = verify_json(rep);
    CHECK(j["overall"] == true);
    for (const char* name : {"corollary2", "lemma5", "cw_consistency", "corollary4_bridge",
                             "zaslavsky_agreement", "homotopy_agreement", "milnor_e1"}) {
        INFO(name);
        CHECK(j["checks"][name]["pass"] == true);
    }
}

TEST_CASE("verify skips oversized oracles but still passes", "[io]") {
    VerifyReport rep = run_verify(boolean_arrangement(4), VerifyOptions{});
    nlohmann::json j = verify_json(rep);
    CHECK(j["checks"]["homotopy_agreement"]["skipped"] == true);
    CHECK(j["checks"]["zaslavsky_agreement"]["skipped"] == true);
    CHECK(j["overall"] == true);
}

TEST_CASE("member indices recover hyperplane subsets", "[io]") {
    CHECK(member_indices(0b101u, 3) == std::vector<int>{0, 2});
    CHECK(member_indices(0u, 3) == std::vector<int>{});
}
