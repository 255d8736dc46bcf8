#pragma once

#include <cstdint>

namespace figulat {

// Enumeration limits shared by every brute-force path.
struct Budget {
    // Raw chain expressions at dimension p number p! * 2^(p-1) across all
    // codimensions; the default admits p <= 9.
    static constexpr std::uint64_t kDefaultMaxExpressions = 362880ULL * 256ULL;
    // Lattice points visited by one scan (n^p for a cube, n^k for a facet,
    // k^m maps for the surjection oracle).
    static constexpr std::uint64_t kDefaultMaxPoints = 10'000'000ULL;

    std::uint64_t max_expressions = kDefaultMaxExpressions;
    std::uint64_t max_points = kDefaultMaxPoints;
};

// base^exp, saturating at UINT64_MAX. Budget checks compare against this.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) noexcept;

// p! * 2^(p-1), saturating.
std::uint64_t raw_expression_total(int p) noexcept;

}  // namespace figulat
