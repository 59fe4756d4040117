#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "arrtop/generators.hpp"
#include "arrtop/homotopy.hpp"
#include "arrtop/io.hpp"
#include "arrtop/milnor.hpp"
#include "arrtop/regions.hpp"
#include "arrtop/topology.hpp"

namespace arrtop {

enum class CheckStatus { Pass, Fail, Skipped, Inconclusive };

struct CheckResult {
    CheckStatus status = CheckStatus::Skipped;
    long long lhs = 0;
    long long rhs = 0;
    std::string reason; // for skipped / inconclusive / failed extras
};

struct VerifyOptions {
    bool all_oracles = false; // widens the homotopy gate to n <= 3
    std::uint64_t seed = kDefaultSeed;
    TrackerSettings tracker;
};

struct VerifyReport {
    std::map<std::string, CheckResult> checks;
    bool overall = false;      // every executed check passed, none inconclusive
    bool any_fail = false;
    bool any_inconclusive = false;
};

inline CheckResult check_of(long long lhs, long long rhs) {
    CheckResult c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.status = (lhs == rhs) ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

/// Runs every applicable cross-oracle identity on one arrangement.
/// Skipped-not-applicable never blocks an overall pass; inconclusive
/// (the numeric oracle could not certify) always does.
inline VerifyReport run_verify(const Arrangement& A, const VerifyOptions& opt = {}) {
    VerifyReport R;
    const IntersectionLattice L = build_lattice(A);
    const long long chi = euler_projective_complement(L);
    const long long bn = grad_degree_lattice(L);

    R.checks["corollary2"] = check_of(corollary2_sum(L), chi);

    {
        EulerReport e = lemma5_check(L);
        long long lhs = (A.n % 2 == 0) ? e.chi_difference : -e.chi_difference;
        R.checks["lemma5"] = check_of(lhs, e.top_betti);
    }

    {
        CWModel m = minimal_cw_model(L);
        CheckResult c = check_of(m.euler, chi);
        if (m.cells[0] != 1 || m.cells[1] != A.d() - 1) {
            c.status = CheckStatus::Fail;
            c.reason = "cell counts off: cells[0]=" + std::to_string(m.cells[0]) +
                       " cells[1]=" + std::to_string(m.cells[1]);
        }
        R.checks["cw_consistency"] = c;
    }

    {
        DeconeResult dec = generic_decone(A, L, opt.seed);
        RegionReport z = zaslavsky_counts(dec.aff);
        R.checks["corollary4_bridge"] = check_of(bn, z.bounded);

        if (A.n <= 3 && A.d() <= 12) {
            RegionReport e = enumerate_regions(dec.aff);
            CheckResult c = check_of(e.regions, z.regions);
            if (e.bounded != z.bounded) {
                c.status = CheckStatus::Fail;
                c.reason = "bounded counts differ: " + std::to_string(e.bounded) + " vs " +
                           std::to_string(z.bounded);
            }
            R.checks["zaslavsky_agreement"] = c;
        } else {
            CheckResult c;
            c.status = CheckStatus::Skipped;
            c.reason = "region enumeration is desk-scale only (n <= 3, d <= 12)";
            R.checks["zaslavsky_agreement"] = c;
        }
    }

    {
        const int max_n = opt.all_oracles ? 3 : 2;
        CheckResult c;
        if (A.n <= max_n && A.d() >= 2 && A.d() <= 6) {
            HomogeneousPoly Q = product_of_linear_forms(A.forms);
            StableCount sc = grad_degree_homotopy_stable(Q, opt.seed, opt.tracker);
            if (sc.count) {
                c = check_of(*sc.count, bn);
            } else {
                c.status = CheckStatus::Inconclusive;
                c.rhs = bn;
                c.reason = "homotopy runs flagged or disagreed across seeds";
            }
        } else {
            c.status = CheckStatus::Skipped;
            c.reason = "homotopy oracle gated to n <= " + std::to_string(max_n) +
                       ", 2 <= d <= 6";
        }
        R.checks["homotopy_agreement"] = c;
    }

    {
        CheckResult c;
        try {
            MilnorReport m = milnor_report(A, L, 1);
            c = check_of(m.morse_count, bn);
        } catch (const internal_error& e) {
            c.status = CheckStatus::Fail;
            c.reason = e.what();
        }
        R.checks["milnor_e1"] = c;
    }

    for (const auto& [name, c] : R.checks) {
        if (c.status == CheckStatus::Fail) R.any_fail = true;
        if (c.status == CheckStatus::Inconclusive) R.any_inconclusive = true;
    }
    R.overall = !R.any_fail && !R.any_inconclusive;
    return R;
}

inline json verify_json(const VerifyReport& R) {
    json checks = json::object();
    for (const auto& [name, c] : R.checks) {
        json jc;
        switch (c.status) {
            case CheckStatus::Pass:
            case CheckStatus::Fail:
                jc = {{"pass", c.status == CheckStatus::Pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
                if (!c.reason.empty()) jc["reason"] = c.reason;
                break;
            case CheckStatus::Skipped:
                jc = {{"skipped", true}, {"reason", c.reason}};
                break;
            case CheckStatus::Inconclusive:
                jc = {{"inconclusive", true}, {"reason", c.reason}};
                break;
        }
        checks[name] = std::move(jc);
    }
    return {{"checks", std::move(checks)}, {"overall", R.overall}};
}

} // namespace arrtop
