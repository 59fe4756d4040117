#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "arrtop/common.hpp"

namespace arrtop {

// Arbitrary-precision rational, always reduced, denominator > 0.
// cpp_rational maintains both invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using VecQ = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q" with integer p, q and q != 0.
inline BigInt parse_bigint(const std::string& text) {
    std::size_t i = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
    if (i == text.size()) throw input_error("bad integer '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9') throw input_error("bad integer '" + text + "'");
    return BigInt(text);
}

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(parse_bigint(text));
        }
        BigInt num = parse_bigint(text.substr(0, slash));
        BigInt den = parse_bigint(text.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const input_error&) {
        throw;
    } catch (const std::runtime_error& e) {
        throw input_error("bad rational '" + text + "': " + e.what());
    }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_zero_vector(const VecQ& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// True iff a = c*b for some scalar c != 0 (both nonzero).
inline bool proportional(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) return false;
    // cross-ratio test: a[i]*b[j] == a[j]*b[i] for all pairs, via first nonzero anchor
    std::size_t k = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 || b[i] != 0) {
            if (a[i] == 0 || b[i] == 0) return false;
            k = i;
            break;
        }
    }
    if (k == a.size()) return true; // both zero vectors
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] * b[k] != a[k] * b[i]) return false;
    }
    return true;
}

inline Rational dot(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw internal_error("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace arrtop
