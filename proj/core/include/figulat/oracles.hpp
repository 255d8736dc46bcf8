#pragma once

#include <cstdint>
#include <vector>

#include "figulat/budget.hpp"
#include "figulat/count.hpp"
#include "figulat/facets.hpp"
#include "figulat/lattice.hpp"

// Brute-force reference computations. Each one walks the raw search space
// directly and calls nothing from combinatorics.hpp; agreement with the
// closed forms is therefore evidence, not tautology.

namespace figulat::oracle {

// Unordered set partition of {1..m}: blocks sorted ascending internally and
// ordered by their smallest element.
using SetPartition = std::vector<std::vector<int>>;

inline constexpr int kMaxSetPartitionSize = 10;

// All surjections {1..m} -> {1..k}, lexicographic in the value vector.
// Filters the k^m maps; ResourceError when k^m > budget.max_points.
std::vector<Surjection> surjections(int m, int k, const Budget& budget = {});

// All set partitions of {1..m} in restricted-growth-string order.
// ResourceError when m > kMaxSetPartitionSize.
std::vector<SetPartition> set_partitions(int m);

// Counts k-tuples over {0..n-1} with t1 >= t2 >= ... >= tk by scanning all
// n^k tuples.
Count weakly_decreasing_tuples(int k, std::uint64_t n, const Budget& budget = {});

// Points of the cube {0..n-1}^p lying in f, found by testing every cube point.
std::uint64_t cube_scan_count(const OrderedSetPartition& f, std::uint64_t n, const Budget& budget = {});

// Signed cover multiplicity through the value-group factorization: sort the
// coordinates, group equal values, and multiply per-group factors
// sum_j (-1)^(g-j) #surj(g -> j), with the surjections counted by brute force.
SignedCount signed_cover(const LatticePoint& pt, int p);

}  // namespace figulat::oracle
