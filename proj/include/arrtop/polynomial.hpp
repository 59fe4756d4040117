#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arrtop/rational.hpp"

namespace arrtop {

using ExpVec = std::vector<int>; // dense exponent vector, length nvars

/// Exact multivariate homogeneous polynomial over Q.
/// Invariants: every exponent vector sums to `degree`, no zero coefficients,
/// at least one term.
struct HomogeneousPoly {
    int nvars = 0;
    int degree = 0;
    std::map<ExpVec, Rational> terms;

    /// Validates and builds; throws input_error on a non-homogeneous or zero input.
    static HomogeneousPoly from_terms(int nvars, std::map<ExpVec, Rational> raw) {
        for (auto it = raw.begin(); it != raw.end();) {
            it = (it->second == 0) ? raw.erase(it) : std::next(it);
        }
        if (raw.empty()) throw input_error("zero polynomial");
        int deg = -1;
        for (const auto& [e, c] : raw) {
            if (static_cast<int>(e.size()) != nvars)
                throw internal_error("exponent vector length mismatch");
            int s = std::accumulate(e.begin(), e.end(), 0);
            for (int k : e)
                if (k < 0) throw internal_error("negative exponent");
            if (deg < 0) deg = s;
            else if (s != deg)
                throw input_error("polynomial is not homogeneous");
        }
        HomogeneousPoly p;
        p.nvars = nvars;
        p.degree = deg;
        p.terms = std::move(raw);
        return p;
    }

    bool operator==(const HomogeneousPoly& o) const {
        return nvars == o.nvars && degree == o.degree && terms == o.terms;
    }
};

/// Formal partial derivative w.r.t. variable i; empty optional encodes the
/// zero polynomial (the variable does not occur).
inline std::optional<HomogeneousPoly> partial_derivative(const HomogeneousPoly& p, int i) {
    if (i < 0 || i >= p.nvars) throw input_error("partial_derivative: variable index out of range");
    std::map<ExpVec, Rational> out;
    for (const auto& [e, c] : p.terms) {
        if (e[static_cast<std::size_t>(i)] == 0) continue;
        ExpVec f = e;
        int k = f[static_cast<std::size_t>(i)]--;
        out[f] += c * k;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    }
    if (out.empty()) return std::nullopt;
    return HomogeneousPoly::from_terms(p.nvars, std::move(out));
}

/// Evaluation over any field with *, +, = from Rational. Exact for Rational
/// points, round-to-nearest for complex<double>.
template <class S>
S evaluate(const HomogeneousPoly& p, const std::vector<S>& point) {
    if (static_cast<int>(point.size()) != p.nvars)
        throw input_error("evaluate: point length != nvars");
    S total = S(0);
    for (const auto& [e, c] : p.terms) {
        S m;
        if constexpr (std::is_same_v<S, Rational>) m = c;
        else m = S(to_double(c));
        for (int v = 0; v < p.nvars; ++v)
            for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k)
                m *= point[static_cast<std::size_t>(v)];
        total += m;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Univariate helpers (restrictions of homogeneous polynomials to lines)

namespace detail {

// coefficient vector c[0] + c[1] t + ..., trailing zeros trimmed
using UPoly = std::vector<Rational>;

inline void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline UPoly upoly_derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<int>(i);
    upoly_trim(d);
    return d;
}

inline void upoly_make_monic(UPoly& p) {
    if (p.empty()) return;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
}

inline UPoly upoly_mod(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        upoly_trim(a);
    }
    return a;
}

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        upoly_make_monic(b); // keeps coefficient growth in check
        UPoly r = upoly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// p restricted to the line t -> a + t*b, expanded in t.
inline UPoly restrict_to_line(const HomogeneousPoly& p, const VecQ& a, const VecQ& b) {
    UPoly total;
    for (const auto& [e, c] : p.terms) {
        UPoly m{c};
        for (int v = 0; v < p.nvars; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            UPoly lin{a[sv], b[sv]};
            upoly_trim(lin);
            for (int k = 0; k < e[sv]; ++k) m = upoly_mul(m, lin);
            if (m.empty()) break;
        }
        if (m.size() > total.size()) total.resize(m.size(), Rational(0));
        for (std::size_t i = 0; i < m.size(); ++i) total[i] += m[i];
    }
    upoly_trim(total);
    return total;
}

} // namespace detail

/// Probabilistic squarefreeness test. Restricts h to random rational lines and
/// checks gcd(h|_line, (h|_line)') is constant. A trial only counts when the
/// restriction has full degree d: in that case a repeated factor of h forces a
/// repeated factor of the restriction, so a squarefree witness is sound.
/// False negatives vanish with the number of trials.
inline bool is_reduced(const HomogeneousPoly& h, int trials = 8, std::uint64_t seed = kDefaultSeed) {
    if (h.terms.empty()) throw input_error("is_reduced: zero polynomial");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < trials; ++trial) {
        VecQ a(static_cast<std::size_t>(h.nvars)), b(static_cast<std::size_t>(h.nvars));
        for (auto& x : a) x = coeff(rng);
        for (auto& x : b) x = coeff(rng);
        detail::UPoly r = detail::restrict_to_line(h, a, b);
        if (static_cast<int>(r.size()) != h.degree + 1) continue; // degenerate line
        detail::UPoly g = detail::upoly_gcd(r, detail::upoly_derivative(r));
        if (g.size() == 1) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parser for the expression syntax: variables x0..xN, rational literals
// ("3" or "3/2"), operators + - * ^, parentheses. Whitespace insignificant.

namespace detail {

struct PolyExpr { // not necessarily homogeneous while parsing
    int nvars = 0;
    std::map<ExpVec, Rational> terms;
};

inline ExpVec resize_exp(const ExpVec& e, int nvars) {
    ExpVec f(static_cast<std::size_t>(nvars), 0);
    std::copy(e.begin(), e.end(), f.begin());
    return f;
}

inline PolyExpr expr_combine(const PolyExpr& a, const PolyExpr& b, int sign) {
    PolyExpr out;
    out.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [e, c] : a.terms) out.terms[resize_exp(e, out.nvars)] += c;
    for (const auto& [e, c] : b.terms) out.terms[resize_exp(e, out.nvars)] += sign * c;
    return out;
}

inline PolyExpr expr_mul(const PolyExpr& a, const PolyExpr& b) {
    PolyExpr out;
    out.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            ExpVec e = resize_exp(ea, out.nvars);
            ExpVec f = resize_exp(eb, out.nvars);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += f[i];
            out.terms[e] += ca * cb;
        }
    }
    return out;
}

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    PolyExpr parse() {
        PolyExpr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    PolyExpr parse_expr() {
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        PolyExpr acc = parse_term();
        if (sign < 0) {
            PolyExpr zero;
            acc = expr_combine(zero, acc, -1);
        }
        for (;;) {
            if (eat('+')) acc = expr_combine(acc, parse_term(), +1);
            else if (eat('-')) acc = expr_combine(acc, parse_term(), -1);
            else break;
        }
        return acc;
    }

    PolyExpr parse_term() {
        PolyExpr acc = parse_factor();
        while (eat('*')) acc = expr_mul(acc, parse_factor());
        return acc;
    }

    PolyExpr parse_factor() {
        PolyExpr base = parse_base();
        if (eat('^')) {
            int k = parse_uint("exponent");
            PolyExpr acc;
            acc.terms[{}] = 1;
            for (int i = 0; i < k; ++i) acc = expr_mul(acc, base);
            return acc;
        }
        return base;
    }

    PolyExpr parse_base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            PolyExpr inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            int idx = parse_uint("variable index");
            PolyExpr e;
            e.nvars = idx + 1;
            ExpVec ev(static_cast<std::size_t>(idx) + 1, 0);
            ev[static_cast<std::size_t>(idx)] = 1;
            e.terms[ev] = 1;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = parse_digits("number");
            Rational q{BigInt(num)};
            if (eat('/')) {
                std::string den = parse_digits("denominator");
                BigInt d(den);
                if (d == 0) fail("zero denominator");
                q = Rational(BigInt(num), d);
            }
            PolyExpr e;
            e.terms[{}] = q;
            return e;
        }
        fail("expected variable, number or '('");
    }

    std::string parse_digits(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected " + what);
        return s_.substr(start, pos_ - start);
    }

    int parse_uint(const std::string& what) {
        std::string d = parse_digits(what);
        if (d.size() > 6) fail(what + " too large");
        return std::stoi(d);
    }
};

} // namespace detail

/// Parses a homogeneous polynomial expression. nvars defaults to the highest
/// variable index seen plus one; pass it explicitly to embed in more variables.
inline HomogeneousPoly parse_polynomial(const std::string& text, int nvars = -1) {
    detail::PolyExpr e = detail::PolyParser(text).parse();
    int nv = std::max(nvars, e.nvars);
    if (nv <= 0) throw input_error("polynomial has no variables");
    if (nvars >= 0 && e.nvars > nvars)
        throw input_error("variable index exceeds requested variable count");
    std::map<ExpVec, Rational> resized;
    for (const auto& [ev, c] : e.terms) resized[detail::resize_exp(ev, nv)] += c;
    return HomogeneousPoly::from_terms(nv, std::move(resized));
}

inline std::string to_string(const HomogeneousPoly& p) {
    std::string out;
    for (const auto& [e, c] : p.terms) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int v = 0; v < p.nvars; ++v) {
            int k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(v);
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) out += c.str();
        else if (c == 1) out += mono;
        else out += c.str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

/// Product of linear forms (rows of length nvars), as a homogeneous polynomial.
inline HomogeneousPoly product_of_linear_forms(const std::vector<VecQ>& forms) {
    if (forms.empty()) throw input_error("empty product of forms");
    const int nv = static_cast<int>(forms[0].size());
    detail::PolyExpr acc;
    acc.nvars = nv;
    acc.terms[detail::resize_exp({}, nv)] = 1;
    for (const auto& f : forms) {
        detail::PolyExpr lin;
        lin.nvars = nv;
        for (int v = 0; v < nv; ++v) {
            if (f[static_cast<std::size_t>(v)] == 0) continue;
            ExpVec e(static_cast<std::size_t>(nv), 0);
            e[static_cast<std::size_t>(v)] = 1;
            lin.terms[e] = f[static_cast<std::size_t>(v)];
        }
        acc = detail::expr_mul(acc, lin);
    }
    return HomogeneousPoly::from_terms(nv, std::move(acc.terms));
}

} // namespace arrtop
