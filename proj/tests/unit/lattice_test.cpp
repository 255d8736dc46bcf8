#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "figulat/combinatorics.hpp"
#include "figulat/errors.hpp"
#include "figulat/lattice.hpp"
#include "figulat/oracles.hpp"

using namespace figulat;

namespace {

OrderedSetPartition facet(const char* text) { return OrderedSetPartition::parse(text); }

}  // namespace

TEST_CASE("lattice point validation") {
    CHECK_THROWS_AS(LatticePoint({2}, 2), DomainError);
    CHECK_THROWS_AS(LatticePoint({-1}, 2), DomainError);
    CHECK_THROWS_AS(LatticePoint({0}, 0), DomainError);
    CHECK(LatticePoint({1, 0, 2}, 3).str() == "1,0,2");
}

TEST_CASE("facet_contains") {
    CHECK(facet_contains(facet("{1}>={2}"), LatticePoint({1, 0}, 2)));
    CHECK_FALSE(facet_contains(facet("{1,2}"), LatticePoint({1, 0}, 2)));
    CHECK(facet_contains(facet("{1}>={2}"), LatticePoint({1, 1}, 2)));
    CHECK_FALSE(facet_contains(facet("{2}>={1}"), LatticePoint({1, 0}, 2)));
    CHECK(facet_contains(facet("{3}>={1,2}"), LatticePoint({0, 0, 2}, 3)));
    CHECK_FALSE(facet_contains(facet("{3}>={1,2}"), LatticePoint({0, 1, 2}, 3)));
    CHECK_THROWS_AS(facet_contains(facet("{1}>={2}"), LatticePoint({1, 0, 0}, 2)), DomainError);
}

TEST_CASE("enumerate_points") {
    auto diag = enumerate_points(facet("{1,2}"), 2);
    REQUIRE(diag.size() == 2);
    CHECK(diag[0].str() == "0,0");
    CHECK(diag[1].str() == "1,1");
    CHECK(enumerate_points(facet("{1}>={2}"), 2).size() == 3);
    for (const char* f : {"{1}>={2}>={3}", "{2,3}>={1}", "{1,2,3}"}) {
        auto pts = enumerate_points(facet(f), 1);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].str() == "0,0,0");
    }
    CHECK_THROWS_AS(enumerate_points(facet("{1}"), 0), DomainError);
}

TEST_CASE("enumerated points are members, distinct, and ordered by block values") {
    for (int p = 1; p <= 5; ++p) {
        const FacetCatalog catalog(p);
        for (int l = 0; l < p; ++l) {
            for (const auto& f : catalog.codimension(l)) {
                for (std::uint64_t n = 1; n <= 4; ++n) {
                    const auto pts = enumerate_points(f, n);
                    std::vector<std::vector<std::int64_t>> keys;
                    for (const auto& pt : pts) {
                        CHECK(facet_contains(f, pt));
                        std::vector<std::int64_t> key;
                        for (const auto& b : f.blocks()) key.push_back(pt[b.front()]);
                        keys.push_back(std::move(key));
                    }
                    CHECK(std::is_sorted(keys.begin(), keys.end()));
                    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
                    CHECK(Count{pts.size()} == count_lattice_points(f, n));
                    CHECK(pts.size() == oracle::cube_scan_count(f, n));
                    CHECK(pts.size() == brute::decreasing_tuples(static_cast<unsigned>(f.block_count()), static_cast<long>(n) - 1));
                }
            }
        }
    }
}

TEST_CASE("point stream budget") {
    Budget b;
    b.max_points = 8;
    CHECK_NOTHROW(FacetPointStream(facet("{1}>={2}>={3}"), 2, b));
    CHECK_THROWS_AS(FacetPointStream(facet("{1}>={2}>={3}"), 3, b), ResourceError);
    // The budget depends on block count, not dimension.
    CHECK_NOTHROW(FacetPointStream(facet("{1,2,3,4,5,6}"), 8, b));
}

TEST_CASE("count_lattice_points") {
    CHECK(count_lattice_points(facet("{1}>={2}"), 2) == Count{3});
    CHECK(count_lattice_points(facet("{1,2,3}"), 5) == Count{5});
    CHECK(count_lattice_points(facet("{1}>={2}>={3}"), 2) == Count{4});
}

TEST_CASE("point_multiplicity") {
    CHECK(point_multiplicity(LatticePoint({1, 0}, 2), 2) == 1);
    CHECK(point_multiplicity(LatticePoint({1, 1}, 2), 2) == 1);
    for (int p = 1; p <= 6; ++p) {
        CHECK(point_multiplicity(LatticePoint(std::vector<std::int64_t>(static_cast<std::size_t>(p), 0), 1), p) == 1);
    }
    CHECK_THROWS_AS(point_multiplicity(LatticePoint({0, 0}, 1), FacetCatalog(3)), DomainError);
}

TEST_CASE("signed cover is one everywhere and every point lies in a top simplex") {
    for (int p = 1; p <= 5; ++p) {
        const FacetCatalog catalog(p);
        for (std::uint64_t n = 1; n <= 4; ++n) {
            CubeScan scan(p, n);
            std::uint64_t visited = 0;
            while (auto pt = scan.next()) {
                ++visited;
                CHECK(point_multiplicity(*pt, catalog) == 1);
                const auto& top = catalog.codimension(0);
                CHECK(std::any_of(top.begin(), top.end(), [&](const auto& f) { return facet_contains(f, *pt); }));
            }
            CHECK(visited == scan.size());
        }
    }
}

TEST_CASE("cube scan") {
    CubeScan scan(2, 2);
    std::vector<std::string> seen;
    while (auto pt = scan.next()) seen.push_back(pt->str());
    CHECK(seen == std::vector<std::string>{"0,0", "0,1", "1,0", "1,1"});
    Budget b;
    b.max_points = 15;
    CHECK_THROWS_AS(CubeScan(4, 2, b), ResourceError);
    CHECK_THROWS_AS(CubeScan(0, 2), DomainError);
}
