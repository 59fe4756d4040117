#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace arrtop {

/// Malformed or inconsistent user input (files, expressions, CLI values).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated internal invariant. Always a bug, never a user error.
/// A numeric oracle could not certify its answer (ambiguous clusters,
/// unresolved path failures). Distinct from wrong input and from bugs.
class inconclusive_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Seed resolution: explicit value wins, then ARRTOP_SEED, then the fixed default.
inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("ARRTOP_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return kDefaultSeed;
}

} // namespace arrtop
