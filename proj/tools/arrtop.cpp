// arrtop: exact topological invariants of hyperplane-arrangement complements,
// cross-checked by combinatorial, real-geometric and numeric oracles.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arrtop/generators.hpp"
#include "arrtop/io.hpp"
#include "arrtop/verify.hpp"

namespace {

using namespace arrtop;

struct CommonArgs {
    std::string file;
    std::string gen;
    std::uint64_t seed = default_seed();
    bool pretty = false;
    bool json_out = false; // accepted for symmetry; JSON is the default
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_input = true) {
    if (with_input) {
        cmd->add_option("file", a.file, "arrangement file (header 'n d', then forms)");
        cmd->add_option("--gen", a.gen,
                        "generator spec: boolean:<n>, generic-lines:<d>, braid:<k>, "
                        "essential-braid:<k>, generic-points:<d>, random-lines:<d>");
    }
    cmd->add_option("--seed", a.seed, "seed for every generic choice (env ARRTOP_SEED)")
        ->capture_default_str();
    cmd->add_flag("--pretty", a.pretty, "human-readable tables instead of JSON");
    cmd->add_flag("--json", a.json_out, "JSON output (default)");
}

Arrangement load_arrangement(const CommonArgs& a) {
    if (!a.file.empty() && !a.gen.empty())
        throw input_error("give either a file or --gen, not both");
    if (!a.file.empty()) return parse_arrangement_file(a.file);
    if (!a.gen.empty()) return parse_gen_spec(a.gen, a.seed);
    throw input_error("no input: give an arrangement file or --gen");
}

void emit(const json& j, bool pretty, const std::string& title = {}) {
    if (!pretty) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (!title.empty()) std::cout << title << "\n";
    std::cout << j.dump(2) << "\n";
}

int cmd_lattice(const CommonArgs& a) {
    Arrangement A = load_arrangement(a);
    IntersectionLattice L = build_lattice(A);
    if (a.pretty) {
        std::cout << "ambient C^" << L.ambient << ", " << L.nforms << " hyperplanes, "
                  << L.flats.size() << " flats, essential: " << (is_essential(L) ? "yes" : "no")
                  << "\n";
        std::cout << "rank profile:";
        for (long long p : L.profile()) std::cout << " " << p;
        std::cout << "\nrank  mu  members\n";
        for (std::size_t i = 0; i < L.flats.size(); ++i) {
            std::cout << "  " << L.flats[i].rank << "   " << L.mu[i] << "   {";
            bool first = true;
            for (int m : member_indices(L.flats[i].members, L.nforms)) {
                std::cout << (first ? "" : ",") << m;
                first = false;
            }
            std::cout << "}\n";
        }
        return 0;
    }
    emit(lattice_json(L), false);
    return 0;
}

int cmd_invariants(const CommonArgs& a) {
    Arrangement A = load_arrangement(a);
    IntersectionLattice L = build_lattice(A);
    json j = invariants_json(A, L);
    if (a.pretty) {
        std::cout << "chi(D(Q)) = " << j["chi"] << "\nbetti =";
        for (const auto& b : j["betti"]) std::cout << " " << b;
        std::cout << "\ngrad degree = " << j["grad_degree"]
                  << "\npolar invariant = " << j["polar_invariant"] << "\ncorollary2 sum = "
                  << j["corollary2"]["sum"] << "\nlemma5: " << j["lemma5"]["lhs"] << " = "
                  << j["lemma5"]["rhs"] << "\n";
        return 0;
    }
    emit(j, false);
    return 0;
}

int cmd_sections(const CommonArgs& a) {
    Arrangement A = load_arrangement(a);
    IntersectionLattice L = build_lattice(A);
    json j = sections_json(L);
    if (a.pretty) {
        std::cout << "i  ambient  grad_degree  term\n";
        for (const auto& r : j["sections"])
            std::cout << r["i"] << "  " << r["ambient"] << "        " << r["grad_degree"]
                      << "            " << r["term"] << "\n";
        std::cout << "sum = " << j["sum"] << "  chi = " << j["chi"] << "\n";
        return 0;
    }
    emit(j, false);
    return 0;
}

int cmd_grad_degree(const CommonArgs& a, const std::string& oracle, const std::string& poly,
                    bool verbose) {
    json j;
    long long degree = -1;
    bool inconclusive = false;
    if (oracle == "combinatorial") {
        Arrangement A = load_arrangement(a);
        IntersectionLattice L = build_lattice(A);
        degree = grad_degree_lattice(L);
        j = {{"oracle", oracle}, {"grad_degree", degree}, {"essential", is_essential(L)}};
    } else if (oracle == "regions") {
        Arrangement A = load_arrangement(a);
        IntersectionLattice L = build_lattice(A);
        DeconeResult dec = generic_decone(A, L, a.seed);
        RegionReport z = zaslavsky_counts(dec.aff);
        degree = z.bounded;
        json chart = json::array();
        for (const auto& c : dec.chart) chart.push_back(to_string(c));
        j = {{"oracle", oracle},
             {"grad_degree", degree},
             {"regions", z.regions},
             {"bounded", z.bounded},
             {"essential", z.essential},
             {"chart", std::move(chart)},
             {"attempts", dec.attempts}};
    } else if (oracle == "homotopy") {
        HomogeneousPoly h = [&] {
            if (!poly.empty()) {
                if (!a.file.empty() || !a.gen.empty())
                    throw input_error("--poly excludes file/--gen input");
                return parse_polynomial(poly);
            }
            return product_of_linear_forms(load_arrangement(a).forms);
        }();
        HomotopyResult r = grad_fiber_count(h, a.seed);
        j = {{"oracle", oracle}, {"homotopy", homotopy_json(r)}};
        if (r.distinct_solutions) {
            degree = *r.distinct_solutions;
            j["grad_degree"] = degree;
            j["polar_invariant"] = static_cast<long long>(h.degree) * degree;
        } else {
            j["grad_degree"] = nullptr;
            inconclusive = true;
        }
        if (verbose) {
            json reps = json::array();
            for (const auto& rep : r.representatives) {
                json pt = json::array();
                for (const auto& c : rep)
                    pt.push_back({{"re", c.real()}, {"im", c.imag()}});
                reps.push_back(std::move(pt));
            }
            j["homotopy"]["representatives"] = std::move(reps);
        }
    } else {
        throw input_error("unknown oracle '" + oracle + "'");
    }
    if (a.pretty)
        std::cout << "oracle " << oracle << ": deg(grad Q) = "
                  << (inconclusive ? std::string("inconclusive") : std::to_string(degree))
                  << "\n";
    else
        emit(j, false);
    return inconclusive ? 3 : 0;
}

int cmd_milnor(const CommonArgs& a, int e) {
    Arrangement A = load_arrangement(a);
    MilnorReport r = milnor_report(A, e);
    json j = milnor_json(r);
    if (a.pretty) {
        std::cout << "d = " << r.d << ", e = " << r.e << "\nchi(F_Q) = " << r.chi_F_Q
                  << "\n|C(g)| = " << r.morse_count << "\nrelative betti:";
        for (const auto& [q, b] : r.relative_betti) std::cout << " b_" << q << "=" << b;
        std::cout << "\n";
        return 0;
    }
    emit(j, false);
    return 0;
}

int cmd_regions(const CommonArgs& a, const std::string& path, bool signs) {
    AffineArrangement aff = parse_affine_file(path);
    RegionReport z = zaslavsky_counts(aff);
    json j = regions_json(z);
    if (aff.n <= 3 && aff.d() <= 12) {
        RegionReport e = enumerate_regions(aff, signs);
        if (e.regions != z.regions || e.bounded != z.bounded) {
            std::cerr << "region oracles disagree: enumeration (" << e.regions << ","
                      << e.bounded << ") vs zaslavsky (" << z.regions << "," << z.bounded
                      << ")\n";
            return 1;
        }
        j = regions_json(e, signs);
        j["essential"] = z.essential;
    }
    if (a.pretty) {
        std::cout << "regions = " << j["regions"] << ", bounded = " << j["bounded"]
                  << ", essential: " << (j["essential"].get<bool>() ? "yes" : "no") << "\n";
        return 0;
    }
    emit(j, false);
    return 0;
}

int cmd_verify(const CommonArgs& a, bool all_oracles) {
    Arrangement A = load_arrangement(a);
    VerifyOptions opt;
    opt.all_oracles = all_oracles;
    opt.seed = a.seed;
    VerifyReport R = run_verify(A, opt);
    if (a.pretty) {
        for (const auto& [name, c] : R.checks) {
            std::cout << name << ": ";
            switch (c.status) {
                case CheckStatus::Pass:
                    std::cout << "pass (" << c.lhs << " = " << c.rhs << ")\n";
                    break;
                case CheckStatus::Fail:
                    std::cout << "FAIL (" << c.lhs << " vs " << c.rhs
                              << (c.reason.empty() ? "" : "; " + c.reason) << ")\n";
                    break;
                case CheckStatus::Skipped:
                    std::cout << "skipped (" << c.reason << ")\n";
                    break;
                case CheckStatus::Inconclusive:
                    std::cout << "inconclusive (" << c.reason << ")\n";
                    break;
            }
        }
        std::cout << "overall: " << (R.overall ? "pass" : "fail") << "\n";
    } else {
        emit(verify_json(R), false);
    }
    if (R.any_fail) return 1;
    if (R.any_inconclusive) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological invariants of hyperplane-arrangement complements"};
    app.require_subcommand(1);

    CommonArgs lat, inv, sec, grd, mil, reg, ver;
    std::string oracle = "combinatorial", poly, regions_file;
    int milnor_e = 1;
    bool all_oracles = false, verbose = false, want_signs = false;

    add_common(app.add_subcommand("lattice", "intersection lattice with Mobius data"), lat);
    add_common(app.add_subcommand("invariants", "Betti, chi, grad degree, identity data"), inv);
    add_common(app.add_subcommand("sections", "generic-section alternating-sum table"), sec);

    auto* g = app.add_subcommand("grad-degree", "degree of the gradient map");
    add_common(g, grd);
    g->add_option("--oracle", oracle, "combinatorial | regions | homotopy")
        ->check(CLI::IsMember({"combinatorial", "regions", "homotopy"}))
        ->capture_default_str();
    g->add_option("--poly", poly, "homogeneous polynomial (homotopy oracle only)");
    g->add_flag("--verbose", verbose, "include endpoint diagnostics");

    auto* m = app.add_subcommand("milnor", "Milnor fiber Morse-count report");
    add_common(m, mil);
    m->add_option("--e", milnor_e, "degree of the generic polynomial f")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* r = app.add_subcommand("regions", "region counts of a real affine arrangement");
    r->add_option("file", regions_file, "affine arrangement file ('n d', rows 'a1 .. an b')")
        ->required();
    r->add_flag("--sign-vectors", want_signs, "list realized sign vectors");
    add_common(r, reg, false);

    auto* v = app.add_subcommand("verify", "run all applicable cross-oracle identities");
    add_common(v, ver);
    v->add_flag("--all-oracles", all_oracles, "widen the homotopy gate to n <= 3");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("lattice")) return cmd_lattice(lat);
        if (app.got_subcommand("invariants")) return cmd_invariants(inv);
        if (app.got_subcommand("sections")) return cmd_sections(sec);
        if (app.got_subcommand("grad-degree")) return cmd_grad_degree(grd, oracle, poly, verbose);
        if (app.got_subcommand("milnor")) return cmd_milnor(mil, milnor_e);
        if (app.got_subcommand("regions")) return cmd_regions(reg, regions_file, want_signs);
        if (app.got_subcommand("verify")) return cmd_verify(ver, all_oracles);
    } catch (const arrtop::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const arrtop::inconclusive_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
