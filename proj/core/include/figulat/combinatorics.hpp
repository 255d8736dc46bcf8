#pragma once

#include <cstdint>

#include "figulat/count.hpp"

namespace figulat {

/// Binomial coefficient C(a, b); zero when b > a.
Count binomial(std::uint64_t a, std::uint64_t b);

/// Figurate number of dimension k and side n: the number of weakly decreasing
/// k-tuples over {0, ..., n-1}, which is C(n + k - 1, k).
///
/// Throws DomainError when k < 1 or n < 1.
Count figurate(int k, std::uint64_t n);

/// Stirling number of the second kind via the triangular recurrence
/// S(m, j) = j S(m-1, j) + S(m-1, j-1). Values are memoized in a process-wide
/// table that grows on demand and is safe to read from several threads.
Count stirling2_recurrence(int m, int j);

/// Stirling number of the second kind from the alternating sum
/// j! S(m, j) = sum_i (-1)^i C(j, i) (j - i)^m. Shares nothing with the
/// recurrence table. Requires j >= 1; throws InternalError if the division
/// by j! leaves a remainder.
Count stirling2_inclusion_exclusion(int m, int j);

Count factorial(int n);

/// Number of surjections from an m-set onto a j-set, j! S(m, j).
Count surjection_count(int m, int j);

/// Number of codimension-l faces of the order decomposition of the p-cube,
/// (p - l)! S(p, p - l). Requires p >= 1 and 0 <= l <= p - 1.
Count facet_count(int p, int l);

/// x (x - 1) ... (x - j + 1); the empty product for j = 0 is 1.
SignedCount falling_factorial(std::int64_t x, int j);

/// sum_{j=1}^{p} S(p, j) x^(j). Equals x^p for every integer x.
SignedCount stirling_identity_eval(int p, std::int64_t x);

/// sum_{l=0}^{p-1} (-1)^l c(p, l) F^{p-l}_n. Equals n^p.
SignedCount rhs_identity(int p, std::uint64_t n);

/// n^p as a Count.
Count power(std::uint64_t n, int p);

}  // namespace figulat
