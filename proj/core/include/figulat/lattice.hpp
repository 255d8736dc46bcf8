#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "figulat/budget.hpp"
#include "figulat/count.hpp"
#include "figulat/facets.hpp"

namespace figulat {

// A point of the integer cube {0, ..., n-1}^p.
class LatticePoint {
public:
    // Throws DomainError if side < 1 or any coordinate leaves [0, side - 1].
    LatticePoint(std::vector<std::int64_t> coords, std::uint64_t side);

    int dimension() const noexcept { return static_cast<int>(coords_.size()); }
    std::uint64_t side() const noexcept { return side_; }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    // 1-based, matching facet indices.
    std::int64_t operator[](int index) const { return coords_.at(static_cast<std::size_t>(index - 1)); }

    // "1,0,2"
    std::string str() const;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

private:
    std::vector<std::int64_t> coords_;
    std::uint64_t side_;
};

// Coordinates constant on each block and weakly decreasing along block order.
// Throws DomainError when the dimensions differ.
bool facet_contains(const OrderedSetPartition& f, const LatticePoint& pt);

// Points of a facet, ordered lexicographically by the vector of block values.
class FacetPointStream {
public:
    // Throws DomainError for n < 1; ResourceError when n^k > budget.max_points.
    FacetPointStream(OrderedSetPartition f, std::uint64_t n, const Budget& budget = {});

    std::optional<LatticePoint> next();

private:
    LatticePoint materialize() const;

    OrderedSetPartition facet_;
    std::uint64_t side_;
    std::vector<std::int64_t> values_;  // one per block, weakly decreasing
    bool started_ = false;
    bool done_ = false;
};

std::vector<LatticePoint> enumerate_points(const OrderedSetPartition& f, std::uint64_t n, const Budget& budget = {});

// figurate(block_count, n).
Count count_lattice_points(const OrderedSetPartition& f, std::uint64_t n);

// sum_l (-1)^l #{codimension-l facets containing pt}. Always 1 on the cube.
// This overload enumerates the facets of dimension p on each call.
SignedCount point_multiplicity(const LatticePoint& pt, int p, const Budget& budget = {});
SignedCount point_multiplicity(const LatticePoint& pt, const FacetCatalog& catalog);

// Visits every point of {0..n-1}^p in lexicographic order. Throws
// ResourceError when n^p > budget.max_points.
class CubeScan {
public:
    CubeScan(int p, std::uint64_t n, const Budget& budget = {});

    std::uint64_t size() const noexcept { return size_; }
    std::optional<LatticePoint> next();

private:
    std::vector<std::int64_t> coords_;
    std::uint64_t side_;
    std::uint64_t size_;
    bool started_ = false;
    bool done_ = false;
};

}  // namespace figulat
