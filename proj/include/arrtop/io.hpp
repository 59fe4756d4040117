#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrtop/homotopy.hpp"
#include "arrtop/milnor.hpp"
#include "arrtop/regions.hpp"
#include "arrtop/topology.hpp"

namespace arrtop {

using nlohmann::json;

namespace detail {

/// Whitespace tokens of the non-comment lines, line numbers kept for errors.
inline std::vector<std::pair<int, std::vector<std::string>>> tokenized_lines(
    std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.emplace_back(lineno, std::move(toks));
    }
    return out;
}

inline std::pair<int, int> parse_header(const std::vector<std::string>& toks) {
    if (toks.size() != 2) throw input_error("header must be 'n d'");
    try {
        return {std::stoi(toks[0]), std::stoi(toks[1])};
    } catch (const std::exception&) {
        throw input_error("header must be two integers 'n d'");
    }
}

inline std::vector<VecQ> parse_rows(
    const std::vector<std::pair<int, std::vector<std::string>>>& lines, int d, int width,
    const char* what) {
    if (static_cast<int>(lines.size()) != d + 1)
        throw input_error(std::string("expected ") + std::to_string(d) + " " + what +
                          " rows, found " + std::to_string(lines.size() - 1));
    std::vector<VecQ> rows;
    for (int i = 1; i <= d; ++i) {
        const auto& [lineno, toks] = lines[static_cast<std::size_t>(i)];
        if (static_cast<int>(toks.size()) != width)
            throw input_error("line " + std::to_string(lineno) + ": expected " +
                              std::to_string(width) + " values, found " +
                              std::to_string(toks.size()));
        VecQ row;
        for (const auto& t : toks) {
            try {
                row.push_back(parse_rational(t));
            } catch (const input_error&) {
                throw input_error("line " + std::to_string(lineno) + ": bad rational '" + t +
                                  "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

/// Text format: header `n d`, then d rows of n+1 rationals (the forms);
/// `#` starts a comment.
inline Arrangement parse_arrangement_stream(std::istream& in) {
    auto lines = detail::tokenized_lines(in);
    if (lines.empty()) throw input_error("empty arrangement file");
    auto [n, d] = detail::parse_header(lines[0].second);
    if (n < 1) throw input_error("projective dimension must be >= 1");
    if (d < 1) throw input_error("need at least one hyperplane");
    return make_arrangement(n, detail::parse_rows(lines, d, n + 1, "form"));
}

inline Arrangement parse_arrangement_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open '" + path + "'");
    return parse_arrangement_stream(f);
}

/// Text format: header `n d`, then d rows `a1 .. an b` meaning a.x = b.
inline AffineArrangement parse_affine_stream(std::istream& in) {
    auto lines = detail::tokenized_lines(in);
    if (lines.empty()) throw input_error("empty affine arrangement file");
    auto [n, d] = detail::parse_header(lines[0].second);
    if (n < 1) throw input_error("affine dimension must be >= 1");
    if (d < 1) throw input_error("need at least one hyperplane");
    std::vector<AffineHyperplane> planes;
    for (auto& row : detail::parse_rows(lines, d, n + 1, "hyperplane")) {
        AffineHyperplane h;
        h.offset = row.back();
        row.pop_back();
        h.normal = std::move(row);
        planes.push_back(std::move(h));
    }
    return make_affine_arrangement(n, std::move(planes));
}

inline AffineArrangement parse_affine_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open '" + path + "'");
    return parse_affine_stream(f);
}

inline std::vector<int> member_indices(std::uint64_t members, int nforms) {
    std::vector<int> out;
    for (int i = 0; i < nforms; ++i)
        if (members & (1ull << i)) out.push_back(i);
    return out;
}

inline json lattice_json(const IntersectionLattice& L) {
    json flats = json::array();
    for (std::size_t i = 0; i < L.flats.size(); ++i) {
        const Flat& f = L.flats[i];
        json key = json::array();
        for (std::size_t r = 0; r < f.key.rows; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < f.key.cols; ++c) row.push_back(to_string(f.key.at(r, c)));
            key.push_back(std::move(row));
        }
        flats.push_back({{"rank", f.rank},
                         {"dim", L.dim(i)},
                         {"mu", L.mu[i]},
                         {"members", member_indices(f.members, L.nforms)},
                         {"key", std::move(key)}});
    }
    return {{"ambient", L.ambient},
            {"nforms", L.nforms},
            {"essential", is_essential(L)},
            {"profile", L.profile()},
            {"char_poly", char_poly(L)},
            {"flats", std::move(flats)}};
}

inline json invariants_json(const Arrangement& A, const IntersectionLattice& L) {
    json terms = json::array();
    long long sum = 0;
    for (const auto& t : corollary2_terms(L)) {
        terms.push_back(t.term);
        sum += t.term;
    }
    EulerReport l5 = lemma5_check(L);
    const long long lhs =
        (A.n % 2 == 0) ? l5.chi_difference : -l5.chi_difference;
    return {{"chi", euler_projective_complement(L)},
            {"betti", betti_projective(L)},
            {"grad_degree", grad_degree_lattice(L)},
            {"polar_invariant", polar_invariant(A, L)},
            {"corollary2", {{"terms", std::move(terms)}, {"sum", sum}}},
            {"lemma5", {{"lhs", lhs}, {"rhs", l5.top_betti}}}};
}

inline json sections_json(const IntersectionLattice& L) {
    json rows = json::array();
    long long sum = 0;
    for (const auto& t : corollary2_terms(L)) {
        json r = {{"i", t.i}, {"ambient", t.ambient}, {"grad_degree", t.grad_degree},
                  {"term", t.term}};
        if (t.i < L.ambient - 1)
            r["betti"] = betti_projective(truncate_generic_section(L, t.i));
        rows.push_back(std::move(r));
        sum += t.term;
    }
    return {{"chi", euler_projective_complement(L)}, {"sum", sum}, {"sections", std::move(rows)}};
}

inline json milnor_json(const MilnorReport& r) {
    json rb = json::object();
    for (const auto& [q, b] : r.relative_betti) rb[std::to_string(q)] = b;
    return {{"d", r.d},
            {"e", r.e},
            {"chi_F_Q", r.chi_F_Q},
            {"morse_count", r.morse_count},
            {"relative_betti", std::move(rb)}};
}

inline json regions_json(const RegionReport& r, bool with_signs = false) {
    json j = {{"regions", r.regions}, {"bounded", r.bounded}, {"essential", r.essential}};
    if (with_signs) j["sign_vectors"] = r.sign_vectors;
    return j;
}

inline json homotopy_json(const HomotopyResult& r) {
    json j = {{"raw_paths", r.raw_paths},
              {"converged", r.converged},
              {"discarded_diverged", r.discarded_diverged},
              {"discarded_on_V_h", r.discarded_on_V_h},
              {"failed", r.failed},
              {"max_residual", r.max_residual},
              {"flags", r.flags},
              {"seed", r.seed_used}};
    if (r.distinct_solutions) j["distinct_solutions"] = *r.distinct_solutions;
    else j["distinct_solutions"] = nullptr;
    return j;
}

} // namespace arrtop
