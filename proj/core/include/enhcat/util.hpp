#ifndef ENHCAT_UTIL_HPP
#define ENHCAT_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace enhcat {

/// Deterministic 64-bit generator (splitmix64). We roll our own instead of
/// <random> distributions because identical seeds must give byte-identical
/// reports across platforms and standard library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling keeps the distribution exactly uniform.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    int pick(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool coin() { return (next() & 1u) != 0; }

  private:
    std::uint64_t state_;
};

/// Joins strings for diagnostics.
std::string join(const std::vector<std::string>& parts, const std::string& sep);

/// Quotes a name for error messages.
inline std::string quoted(const std::string& s) { return "'" + s + "'"; }

/// Canonical composite name for synthesized structures: a JSON-style array of
/// parts. Escaping makes the encoding injective, so distinct part lists never
/// collide, and lexicographic order is deterministic.
std::string encode_name(const std::vector<std::string>& parts);

} // namespace enhcat

#endif
