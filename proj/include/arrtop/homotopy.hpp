#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "arrtop/polynomial.hpp"

namespace arrtop {

struct TrackerSettings {
    double step_init = 0.05;
    double step_max = 0.2;
    double step_min = 1e-13;
    double newton_tol = 1e-12;   // corrector contraction target
    int newton_iters = 3;        // corrector budget per step
    double divergence = 1e8;     // |z| beyond this = path to infinity
    double cluster_tol = 1e-6;   // projective distance merging endpoints
    double ambiguity_factor = 10.0;
    double membership_tol = 1e-8; // |h| below this = endpoint on V(h)
    int sharpen_iters = 5;
    int max_steps = 50000;
    int retries = 2; // full re-runs with derived seeds on path failure
};

struct HomotopyResult {
    long long raw_paths = 0;
    long long converged = 0;
    long long discarded_diverged = 0;
    long long discarded_on_V_h = 0;
    long long failed = 0;
    std::optional<long long> distinct_solutions; // unset when ambiguous
    double max_residual = 0.0; // over accepted endpoints, after sharpening
    std::vector<std::string> flags;
    std::vector<std::vector<std::complex<double>>> representatives; // one x per cluster
    std::uint64_t seed_used = 0;
};

namespace detail {

using Cx = std::complex<double>;

/// Certification bound for sharpened endpoints (relative Newton-update size).
inline constexpr double kCertifyTol = 1e-9;

/// Dense polynomial with double-complex coefficients and a power-table
/// evaluator; nvars <= 4 at desk scale.
struct CompiledPoly {
    int nvars = 0;
    std::vector<std::pair<std::array<int, 4>, Cx>> terms;

    bool zero() const { return terms.empty(); }

    Cx eval(const std::vector<std::vector<Cx>>& pw) const {
        Cx s = 0;
        for (const auto& [e, c] : terms) {
            Cx m = c;
            for (int v = 0; v < nvars; ++v)
                if (e[static_cast<std::size_t>(v)] > 0)
                    m *= pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(
                        e[static_cast<std::size_t>(v)])];
            s += m;
        }
        return s;
    }
};

inline CompiledPoly compile_poly(const HomogeneousPoly& p, double scale = 1.0) {
    CompiledPoly c;
    c.nvars = p.nvars;
    for (const auto& [e, q] : p.terms) {
        std::array<int, 4> a{0, 0, 0, 0};
        for (std::size_t i = 0; i < e.size(); ++i) a[i] = e[i];
        c.terms.emplace_back(a, Cx(to_double(q) * scale, 0.0));
    }
    return c;
}

inline CompiledPoly compile_zero(int nvars) {
    CompiledPoly c;
    c.nvars = nvars;
    return c;
}

/// LU solve with partial pivoting; N <= 5. False on a (near-)singular matrix.
inline bool lu_solve(std::vector<std::vector<Cx>> a, std::vector<Cx> b, std::vector<Cx>& out) {
    const std::size_t N = a.size();
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t piv = k;
        double best = std::abs(a[k][k]);
        for (std::size_t i = k + 1; i < N; ++i)
            if (std::abs(a[i][k]) > best) {
                best = std::abs(a[i][k]);
                piv = i;
            }
        if (best < 1e-300) return false;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            Cx f = a[i][k] / a[k][k];
            if (f == Cx(0)) continue;
            for (std::size_t j = k; j < N; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    out.assign(N, Cx(0));
    for (std::size_t i = N; i-- > 0;) {
        Cx s = b[i];
        for (std::size_t j = i + 1; j < N; ++j) s -= a[i][j] * out[j];
        out[i] = s / a[i][i];
    }
    return true;
}

inline double inf_norm(const std::vector<Cx>& v) {
    double m = 0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

/// Square system {h_i(x) - lambda c_i = 0 (i=0..n), r.x - 1 = 0} in
/// z = (x, lambda), plus the total-degree start system
/// {a_i (x_i^{d-1} - b_i), a_last (lambda - b_last)} and the path constant.
/// The gradient rows are globally rescaled to unit coefficient size (pure row
/// scaling absorbed into lambda), so residuals are O(1)-calibrated.
struct GradientSystem {
    int nv = 0; // number of x variables = n+1
    int d = 0;
    CompiledPoly h; // coefficient-normalized, used for V(h) membership
    std::vector<CompiledPoly> h1;
    std::vector<std::vector<CompiledPoly>> h2;
    std::vector<Cx> c, r;
    std::vector<Cx> sa, sb; // start-system coefficients, size nv+1
    Cx gamma;

    std::size_t N() const { return static_cast<std::size_t>(nv) + 1; }

    void power_table(const std::vector<Cx>& z, std::vector<std::vector<Cx>>& pw) const {
        if (pw.size() != static_cast<std::size_t>(nv))
            pw.assign(static_cast<std::size_t>(nv),
                      std::vector<Cx>(static_cast<std::size_t>(d) + 1, Cx(1)));
        for (int v = 0; v < nv; ++v) {
            auto& col = pw[static_cast<std::size_t>(v)];
            if (col.size() != static_cast<std::size_t>(d) + 1)
                col.assign(static_cast<std::size_t>(d) + 1, Cx(1));
            col[0] = 1;
            for (int k = 1; k <= d; ++k)
                col[static_cast<std::size_t>(k)] =
                    col[static_cast<std::size_t>(k - 1)] * z[static_cast<std::size_t>(v)];
        }
    }

    std::vector<Cx> target(const std::vector<Cx>& z,
                           const std::vector<std::vector<Cx>>& pw) const {
        std::vector<Cx> F(N());
        const Cx lam = z[N() - 1];
        for (int i = 0; i < nv; ++i)
            F[static_cast<std::size_t>(i)] =
                h1[static_cast<std::size_t>(i)].eval(pw) - lam * c[static_cast<std::size_t>(i)];
        Cx rx = 0;
        for (int j = 0; j < nv; ++j)
            rx += r[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
        F[N() - 1] = rx - 1.0;
        return F;
    }

    std::vector<Cx> start(const std::vector<Cx>& z,
                          const std::vector<std::vector<Cx>>& pw) const {
        std::vector<Cx> G(N());
        for (int i = 0; i < nv; ++i)
            G[static_cast<std::size_t>(i)] =
                sa[static_cast<std::size_t>(i)] *
                (pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] -
                 sb[static_cast<std::size_t>(i)]);
        G[N() - 1] = sa[N() - 1] * (z[N() - 1] - sb[N() - 1]);
        return G;
    }

    std::vector<Cx> homotopy(const std::vector<Cx>& z, double s,
                             std::vector<std::vector<Cx>>& pw) const {
        power_table(z, pw);
        std::vector<Cx> F = target(z, pw), G = start(z, pw), H(N());
        for (std::size_t i = 0; i < N(); ++i) H[i] = (1.0 - s) * gamma * G[i] + s * F[i];
        return H;
    }

    /// d/ds of the homotopy (independent of s): F - gamma G.
    std::vector<Cx> homotopy_ds(const std::vector<Cx>& z,
                                std::vector<std::vector<Cx>>& pw) const {
        power_table(z, pw);
        std::vector<Cx> F = target(z, pw), G = start(z, pw), Hs(N());
        for (std::size_t i = 0; i < N(); ++i) Hs[i] = F[i] - gamma * G[i];
        return Hs;
    }

    std::vector<std::vector<Cx>> jacobian(const std::vector<Cx>& z, double s,
                                          std::vector<std::vector<Cx>>& pw) const {
        power_table(z, pw);
        std::vector<std::vector<Cx>> J(N(), std::vector<Cx>(N(), Cx(0)));
        for (int i = 0; i < nv; ++i) {
            for (int j = 0; j < nv; ++j) {
                Cx fz = h2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(pw);
                Cx gz = 0;
                if (i == j) {
                    gz = sa[static_cast<std::size_t>(i)] * double(d - 1) *
                         pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 2)];
                }
                J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (1.0 - s) * gamma * gz + s * fz;
            }
            J[static_cast<std::size_t>(i)][N() - 1] = s * (-c[static_cast<std::size_t>(i)]);
        }
        for (int j = 0; j < nv; ++j)
            J[N() - 1][static_cast<std::size_t>(j)] = s * r[static_cast<std::size_t>(j)];
        J[N() - 1][N() - 1] = (1.0 - s) * gamma * sa[N() - 1];
        return J;
    }
};

inline GradientSystem build_system(const HomogeneousPoly& h, std::uint64_t seed) {
    GradientSystem S;
    S.nv = h.nvars;
    S.d = h.degree;
    double maxc = 0;
    for (const auto& [e, q] : h.terms) maxc = std::max(maxc, std::abs(to_double(q)));
    S.h = compile_poly(h, 1.0 / maxc);
    for (int i = 0; i < S.nv; ++i) {
        auto pi = partial_derivative(h, i);
        S.h1.push_back(pi ? compile_poly(*pi) : compile_zero(S.nv));
        std::vector<CompiledPoly> row;
        for (int j = 0; j < S.nv; ++j) {
            if (!pi) {
                row.push_back(compile_zero(S.nv));
                continue;
            }
            auto pij = partial_derivative(*pi, j);
            row.push_back(pij ? compile_poly(*pij) : compile_zero(S.nv));
        }
        S.h2.push_back(std::move(row));
    }
    double m1 = 0;
    for (const auto& p : S.h1)
        for (const auto& [e, q] : p.terms) m1 = std::max(m1, std::abs(q));
    if (m1 > 0) {
        const double sigma = 1.0 / m1;
        for (auto& p : S.h1)
            for (auto& [e, q] : p.terms) q *= sigma;
        for (auto& row : S.h2)
            for (auto& p : row)
                for (auto& [e, q] : p.terms) q *= sigma;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    auto unit = [&] { return std::polar(1.0, ang(rng)); };
    for (int i = 0; i < S.nv; ++i) S.c.push_back(unit());
    for (int i = 0; i < S.nv; ++i) S.r.push_back(unit());
    S.gamma = unit();
    for (std::size_t i = 0; i < S.N(); ++i) S.sa.push_back(unit());
    for (std::size_t i = 0; i < S.N(); ++i) S.sb.push_back(unit());
    return S;
}

enum class PathEnd { Accepted, OnVh, Diverged, Failed };

struct PathOutcome {
    PathEnd end = PathEnd::Failed;
    std::vector<Cx> z;
    double residual = 0.0;
};

inline std::vector<Cx> normalized_x(const GradientSystem& S, const std::vector<Cx>& z) {
    std::vector<Cx> x(z.begin(), z.begin() + S.nv);
    double nrm = 0;
    for (const auto& v : x) nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    for (auto& v : x) v /= nrm;
    return x;
}

/// Tangent dz/ds = -Hz^{-1} Hs at (z, s); false when the Jacobian is singular.
inline bool tangent(const GradientSystem& S, const std::vector<Cx>& z, double s,
                    std::vector<std::vector<Cx>>& pw, std::vector<Cx>& v) {
    auto J = S.jacobian(z, s, pw);
    std::vector<Cx> Hs = S.homotopy_ds(z, pw);
    for (auto& h : Hs) h = -h;
    return lu_solve(std::move(J), std::move(Hs), v);
}

/// Damped-free Newton corrector at fixed s. Success requires the update sizes
/// to contract and the last one to drop below the relative tolerance; the
/// first update must stay under jump_cap so a predictor that strayed into a
/// neighbouring basin rejects the step instead of switching paths.
inline bool correct(const GradientSystem& S, std::vector<Cx>& z, double s,
                    const TrackerSettings& cfg, std::vector<std::vector<Cx>>& pw,
                    double jump_cap, int& iters_used) {
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < cfg.newton_iters; ++it) {
        std::vector<Cx> H = S.homotopy(z, s, pw);
        auto J = S.jacobian(z, s, pw);
        for (auto& h : H) h = -h;
        std::vector<Cx> dz;
        if (!lu_solve(std::move(J), std::move(H), dz)) return false;
        const double nd = inf_norm(dz);
        if (it == 0 && nd > jump_cap) return false;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += dz[i];
        iters_used = it + 1;
        if (nd <= cfg.newton_tol * (1.0 + inf_norm(z))) return true;
        if (it > 0 && nd > 0.5 * prev) return false;
        prev = nd;
    }
    return false;
}

/// Sharpen at s=1 and classify: V(h) membership first (indeterminacy points),
/// then certified regular endpoints, everything else a failure.
inline PathOutcome classify_end(const GradientSystem& S, std::vector<Cx> z,
                                const TrackerSettings& cfg, bool from_stall) {
    std::vector<std::vector<Cx>> pw;
    bool certified = false;
    for (int it = 0; it < cfg.sharpen_iters; ++it) {
        std::vector<Cx> H = S.homotopy(z, 1.0, pw);
        auto J = S.jacobian(z, 1.0, pw);
        for (auto& h : H) h = -h;
        std::vector<Cx> dz;
        if (!lu_solve(std::move(J), std::move(H), dz)) break;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += dz[i];
        if (inf_norm(dz) <= kCertifyTol * (1.0 + inf_norm(z))) {
            certified = true;
            break;
        }
    }

    PathOutcome out;
    std::vector<Cx> xz = normalized_x(S, z);
    xz.push_back(Cx(0)); // power_table only reads the x part
    std::vector<std::vector<Cx>> pwx;
    S.power_table(xz, pwx);
    if (std::abs(S.h.eval(pwx)) < cfg.membership_tol) {
        out.end = PathEnd::OnVh;
        out.z = std::move(z);
        return out;
    }
    if (!certified || from_stall) {
        out.end = PathEnd::Failed;
        return out;
    }
    S.power_table(z, pw);
    out.residual = inf_norm(S.target(z, pw));
    out.end = PathEnd::Accepted;
    out.z = std::move(z);
    return out;
}

inline PathOutcome track_path(const GradientSystem& S, std::vector<Cx> z,
                              const TrackerSettings& cfg) {
    std::vector<std::vector<Cx>> pw;
    std::vector<Cx> k1, k2, k3, k4, zt(z.size());
    double s = 0.0;
    double step = cfg.step_init;
    int steps = 0;
    double norm_base = -1.0; // |z| when the path first passes s = 0.99

    while (s < 1.0) {
        if (++steps > cfg.max_steps) return PathOutcome{};
        if (inf_norm(z) > cfg.divergence) {
            PathOutcome out;
            out.end = PathEnd::Diverged;
            return out;
        }
        const double ds = std::min(step, 1.0 - s);
        const double target_s = s + ds;

        // RK4 predictor along dz/ds = -Hz^{-1} Hs
        bool predicted = tangent(S, z, s, pw, k1);
        if (predicted) {
            for (std::size_t i = 0; i < z.size(); ++i) zt[i] = z[i] + 0.5 * ds * k1[i];
            predicted = tangent(S, zt, s + 0.5 * ds, pw, k2);
        }
        if (predicted) {
            for (std::size_t i = 0; i < z.size(); ++i) zt[i] = z[i] + 0.5 * ds * k2[i];
            predicted = tangent(S, zt, s + 0.5 * ds, pw, k3);
        }
        if (predicted) {
            for (std::size_t i = 0; i < z.size(); ++i) zt[i] = z[i] + ds * k3[i];
            predicted = tangent(S, zt, target_s, pw, k4);
        }

        bool ok = false;
        std::vector<Cx> zc;
        if (predicted) {
            zc = z;
            for (std::size_t i = 0; i < z.size(); ++i)
                zc[i] += (ds / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            const double jump_cap = 0.25 * (1.0 + inf_norm(zc));
            int iters_used = cfg.newton_iters;
            ok = correct(S, zc, target_s, cfg, pw, jump_cap, iters_used);
            if (ok) {
                z = std::move(zc);
                s = target_s;
                if (norm_base < 0 && s >= 0.99) norm_base = inf_norm(z);
                if (iters_used <= 2) step = std::min(step * 1.5, cfg.step_max);
                continue;
            }
        }
        step /= 2.0;
        if (step >= cfg.step_min) continue;

        // Stalled. A path to infinity grows like (1-s)^{-1/m} and cannot reach
        // the hard divergence cutoff in double precision for winding m >= 3;
        // sustained geometric growth since s = 0.99 identifies it instead.
        // Everything else near s = 1 is an endpoint on V(h) or a failure.
        if (s >= 0.999) {
            if (norm_base > 0 && inf_norm(z) > 15.0 * std::max(1.0, norm_base)) {
                PathOutcome out;
                out.end = PathEnd::Diverged;
                return out;
            }
            return classify_end(S, std::move(z), cfg, /*from_stall=*/true);
        }
        return PathOutcome{};
    }
    return classify_end(S, std::move(z), cfg, /*from_stall=*/false);
}

/// Canonical projective representative: unit norm, largest coordinate made
/// real positive; gives a deterministic sort key for clustering.
inline std::vector<Cx> projective_rep(const std::vector<Cx>& x) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs(x[i]) > std::abs(x[k])) k = i;
    Cx phase = x[k] / std::abs(x[k]);
    std::vector<Cx> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] / phase;
    return r;
}

inline double fubini_study(const std::vector<Cx>& u, const std::vector<Cx>& v) {
    Cx ip = 0;
    for (std::size_t i = 0; i < u.size(); ++i) ip += std::conj(u[i]) * v[i];
    double c2 = std::min(1.0, std::norm(ip));
    return std::sqrt(1.0 - c2);
}

inline HomotopyResult solve_once(const HomogeneousPoly& h, std::uint64_t seed,
                                 const TrackerSettings& cfg) {
    GradientSystem S = build_system(h, seed);
    const int k = S.d - 1;
    long long total = 1;
    for (int i = 0; i < S.nv; ++i) total *= k;

    HomotopyResult res;
    res.raw_paths = total;
    res.seed_used = seed;

    std::vector<PathOutcome> accepted;
    std::vector<int> idx(static_cast<std::size_t>(S.nv), 0);
    for (long long p = 0; p < total; ++p) {
        std::vector<Cx> z;
        for (int i = 0; i < S.nv; ++i) {
            Cx root = std::pow(S.sb[static_cast<std::size_t>(i)], 1.0 / k);
            double turn = 2.0 * std::numbers::pi * idx[static_cast<std::size_t>(i)] / k;
            z.push_back(root * std::polar(1.0, turn));
        }
        z.push_back(S.sb[S.N() - 1]);
        PathOutcome out = track_path(S, std::move(z), cfg);
        switch (out.end) {
            case PathEnd::Accepted:
                ++res.converged;
                res.max_residual = std::max(res.max_residual, out.residual);
                accepted.push_back(std::move(out));
                break;
            case PathEnd::OnVh:
                ++res.converged;
                ++res.discarded_on_V_h;
                break;
            case PathEnd::Diverged:
                ++res.discarded_diverged;
                break;
            case PathEnd::Failed:
                ++res.failed;
                break;
        }
        for (int i = 0; i < S.nv; ++i) { // mixed-radix advance
            if (++idx[static_cast<std::size_t>(i)] < k) break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    if (res.failed > 0) res.flags.push_back("singular_endpoint");

    // deterministic clustering: sort canonical representatives, then merge
    std::vector<std::vector<Cx>> reps;
    for (const auto& out : accepted) reps.push_back(projective_rep(normalized_x(S, out.z)));
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto ka = std::llround(a[i].real() * 1e9), kb = std::llround(b[i].real() * 1e9);
            if (ka != kb) return ka < kb;
            ka = std::llround(a[i].imag() * 1e9), kb = std::llround(b[i].imag() * 1e9);
            if (ka != kb) return ka < kb;
        }
        return false;
    });
    bool ambiguous = false;
    std::vector<std::vector<Cx>> clusters;
    for (const auto& rep : reps) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& cl : clusters) best = std::min(best, fubini_study(cl, rep));
        if (best < cfg.cluster_tol) continue;
        if (best < cfg.cluster_tol * cfg.ambiguity_factor) ambiguous = true;
        clusters.push_back(rep);
    }
    if (ambiguous) {
        res.flags.push_back("cluster_ambiguity");
    } else {
        res.distinct_solutions = static_cast<long long>(clusters.size());
    }
    res.representatives = std::move(clusters);
    return res;
}

} // namespace detail

/// Numeric gradient-degree oracle: counts the fiber of grad h over a random
/// target by total-degree continuation on the square chart system. Retries
/// with derived seeds when paths fail or clusters are ambiguous; the final
/// attempt's flags are preserved if every retry stays unclean.
inline HomotopyResult grad_fiber_count(const HomogeneousPoly& h, std::uint64_t seed,
                                       const TrackerSettings& cfg = {}) {
    if (h.degree < 2) throw input_error("grad_fiber_count: degree must be >= 2");
    if (h.nvars > 4) throw input_error("grad_fiber_count: at most 4 variables");
    if (!is_reduced(h, 8, seed)) throw input_error("grad_fiber_count: polynomial is not reduced");
    HomotopyResult res;
    for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
        std::uint64_t s = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);
        res = detail::solve_once(h, s, cfg);
        if (res.flags.empty()) return res;
    }
    return res;
}

/// d * deg(grad h) computed numerically; throws inconclusive_error instead of
/// guessing when the run is flagged.
inline long long polar_invariant_numeric(const HomogeneousPoly& h, std::uint64_t seed,
                                         const TrackerSettings& cfg = {}) {
    HomotopyResult r = grad_fiber_count(h, seed, cfg);
    if (!r.distinct_solutions)
        throw inconclusive_error("polar_invariant_numeric: ambiguous endpoint clusters");
    return static_cast<long long>(h.degree) * *r.distinct_solutions;
}

struct StableCount {
    std::optional<long long> count; // set iff all runs agree and are unflagged
    std::vector<HomotopyResult> runs;
};

/// Runs the oracle on `nseeds` consecutive seeds; the count is certified only
/// if every run is clean and all runs agree.
inline StableCount grad_degree_homotopy_stable(const HomogeneousPoly& h, std::uint64_t seed,
                                               const TrackerSettings& cfg = {}, int nseeds = 3) {
    StableCount sc;
    std::optional<long long> agreed;
    bool ok = true;
    for (int i = 0; i < nseeds; ++i) {
        sc.runs.push_back(grad_fiber_count(h, seed + static_cast<std::uint64_t>(i), cfg));
        const auto& r = sc.runs.back();
        if (!r.distinct_solutions || !r.flags.empty()) {
            ok = false;
            continue;
        }
        if (!agreed) agreed = r.distinct_solutions;
        else if (*agreed != *r.distinct_solutions) ok = false;
    }
    if (ok && agreed) sc.count = agreed;
    return sc;
}

} // namespace arrtop
