#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "figulat/budget.hpp"
#include "figulat/count.hpp"
#include "figulat/lattice.hpp"

namespace figulat {

// The three ways of evaluating sum_l (-1)^l c(p,l) F^{p-l}_n against n^p.
//   algebraic  closed forms only
//   geometric  facets and their lattice points are enumerated
//   pointwise  every cube point must have signed cover multiplicity 1
enum class Route { Algebraic, Geometric, Pointwise };

inline constexpr Route kAllRoutes[] = {Route::Algebraic, Route::Geometric, Route::Pointwise};

std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

struct CodimensionTerm {
    int l;
    Count facet_count;
    Count per_facet_points;
    SignedCount signed_term;  // (-1)^l * facet_count * per_facet_points
};

struct VerificationReport {
    int p = 0;
    std::uint64_t n = 0;
    Route route = Route::Algebraic;
    Count lhs;  // n^p
    SignedCount rhs;
    std::vector<CodimensionTerm> terms;  // l = 0..p-1; empty for pointwise
    bool ok = false;
    // Lattice points actually visited. Zero for the algebraic route; positive
    // for the enumerating routes.
    std::uint64_t enumerated_points = 0;
    // Pointwise route: the first point whose multiplicity was not 1.
    std::optional<LatticePoint> first_failure;
};

VerificationReport verify_algebraic(int p, std::uint64_t n);

// Throws ResourceError when facet or point enumeration exceeds the budget,
// and InternalError if facets of equal block count disagree on point counts.
VerificationReport verify_geometric(int p, std::uint64_t n, const Budget& budget = {});

// Throws ResourceError when n^p exceeds budget.max_points.
VerificationReport verify_pointwise(int p, std::uint64_t n, const Budget& budget = {});

VerificationReport verify(Route route, int p, std::uint64_t n, const Budget& budget = {});

struct SweepGrid {
    int p_min = 1;
    int p_max = 1;
    std::uint64_t n_min = 1;
    std::uint64_t n_max = 1;
    std::vector<Route> routes{std::begin(kAllRoutes), std::end(kAllRoutes)};
};

// One grid cell: either a report, or the budget error that prevented it.
struct SweepCell {
    int p;
    std::uint64_t n;
    Route route;
    std::optional<VerificationReport> report;
    std::string error;
};

// Cells ordered by p, then n, then route (in the order given). Budget errors
// are recorded per cell and never abort the sweep. threads = 0 picks the
// hardware concurrency; output does not depend on the thread count.
std::vector<SweepCell> sweep(const SweepGrid& grid, const Budget& budget = {}, unsigned threads = 1);
std::vector<SweepCell> sweep(int p_max, std::uint64_t n_max, const std::vector<Route>& routes,
                             const Budget& budget = {}, unsigned threads = 1);

}  // namespace figulat
