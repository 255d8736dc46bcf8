#include "figulat/lattice.hpp"

#include "figulat/combinatorics.hpp"
#include "figulat/errors.hpp"

namespace figulat {

LatticePoint::LatticePoint(std::vector<std::int64_t> coords, std::uint64_t side)
    : coords_(std::move(coords)), side_(side) {
    if (side_ < 1) throw DomainError("lattice point: side n must be >= 1");
    for (auto c : coords_) {
        if (c < 0 || static_cast<std::uint64_t>(c) >= side_) {
            throw DomainError("lattice point: coordinate " + std::to_string(c) + " outside [0, " +
                              std::to_string(side_ - 1) + "]");
        }
    }
}

std::string LatticePoint::str() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(coords_[i]);
    }
    return s;
}

bool facet_contains(const OrderedSetPartition& f, const LatticePoint& pt) {
    if (f.dimension() != pt.dimension()) {
        throw DomainError("facet_contains: facet has dimension " + std::to_string(f.dimension()) +
                          " but point has " + std::to_string(pt.dimension()));
    }
    std::optional<std::int64_t> previous;
    for (const auto& block : f.blocks()) {
        const std::int64_t v = pt[block.front()];
        for (int idx : block) {
            if (pt[idx] != v) return false;
        }
        if (previous && v > *previous) return false;
        previous = v;
    }
    return true;
}

FacetPointStream::FacetPointStream(OrderedSetPartition f, std::uint64_t n, const Budget& budget)
    : facet_(std::move(f)), side_(n) {
    if (n < 1) throw DomainError("enumerate_points: side n must be >= 1");
    const auto k = static_cast<unsigned>(facet_.block_count());
    if (saturating_pow(n, k) > budget.max_points) {
        throw ResourceError("max-points", budget.max_points,
                            "enumerating points of " + facet_.str() + " at n = " + std::to_string(n));
    }
    values_.assign(k, 0);
}

LatticePoint FacetPointStream::materialize() const {
    std::vector<std::int64_t> coords(static_cast<std::size_t>(facet_.dimension()));
    for (std::size_t b = 0; b < facet_.blocks().size(); ++b) {
        for (int idx : facet_.blocks()[b]) coords[static_cast<std::size_t>(idx - 1)] = values_[b];
    }
    return LatticePoint(std::move(coords), side_);
}

std::optional<LatticePoint> FacetPointStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // Successor among weakly decreasing vectors: bump the rightmost entry
        // that is still below its left neighbour (or below n-1 for the first),
        // then zero everything to its right.
        const auto top = static_cast<std::int64_t>(side_) - 1;
        std::size_t i = values_.size();
        while (i > 0) {
            --i;
            const std::int64_t bound = i == 0 ? top : values_[i - 1];
            if (values_[i] < bound) {
                ++values_[i];
                for (std::size_t j = i + 1; j < values_.size(); ++j) values_[j] = 0;
                return materialize();
            }
        }
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return materialize();
}

std::vector<LatticePoint> enumerate_points(const OrderedSetPartition& f, std::uint64_t n, const Budget& budget) {
    FacetPointStream stream(f, n, budget);
    std::vector<LatticePoint> out;
    while (auto pt = stream.next()) out.push_back(std::move(*pt));
    return out;
}

Count count_lattice_points(const OrderedSetPartition& f, std::uint64_t n) {
    return figurate(f.block_count(), n);
}

SignedCount point_multiplicity(const LatticePoint& pt, const FacetCatalog& catalog) {
    if (catalog.dimension() != pt.dimension()) {
        throw DomainError("point_multiplicity: point dimension " + std::to_string(pt.dimension()) +
                          " differs from facet dimension " + std::to_string(catalog.dimension()));
    }
    SignedCount sum = 0;
    for (int l = 0; l < catalog.dimension(); ++l) {
        long containing = 0;
        for (const auto& f : catalog.codimension(l)) containing += facet_contains(f, pt) ? 1 : 0;
        if (l % 2 == 0) {
            sum += containing;
        } else {
            sum -= containing;
        }
    }
    return sum;
}

SignedCount point_multiplicity(const LatticePoint& pt, int p, const Budget& budget) {
    return point_multiplicity(pt, FacetCatalog(p, budget));
}

CubeScan::CubeScan(int p, std::uint64_t n, const Budget& budget) : side_(n) {
    if (p < 1) throw DomainError("cube scan: p must be >= 1");
    if (n < 1) throw DomainError("cube scan: n must be >= 1");
    size_ = saturating_pow(n, static_cast<unsigned>(p));
    if (size_ > budget.max_points) {
        throw ResourceError("max-points", budget.max_points,
                            "scanning the cube at p = " + std::to_string(p) + ", n = " + std::to_string(n));
    }
    coords_.assign(static_cast<std::size_t>(p), 0);
}

std::optional<LatticePoint> CubeScan::next() {
    if (done_) return std::nullopt;
    if (started_) {
        std::size_t i = coords_.size();
        while (true) {
            if (i == 0) {
                done_ = true;
                return std::nullopt;
            }
            --i;
            if (static_cast<std::uint64_t>(++coords_[i]) < side_) break;
            coords_[i] = 0;
        }
    }
    started_ = true;
    return LatticePoint(coords_, side_);
}

}  // namespace figulat
