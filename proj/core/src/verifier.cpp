#include "figulat/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "figulat/combinatorics.hpp"
#include "figulat/errors.hpp"
#include "figulat/facets.hpp"

namespace figulat {
namespace {

void require_cell(int p, std::uint64_t n) {
    if (p < 1) throw DomainError("verify: p must be >= 1, got " + std::to_string(p));
    if (n < 1) throw DomainError("verify: n must be >= 1, got 0");
}

SignedCount alternate(int l, const BigInt& magnitude) { return l % 2 == 0 ? SignedCount(magnitude) : SignedCount(-magnitude); }

VerificationReport start_report(Route route, int p, std::uint64_t n) {
    VerificationReport r;
    r.p = p;
    r.n = n;
    r.route = route;
    r.lhs = power(n, p);
    return r;
}

}  // namespace

std::string_view route_name(Route r) {
    switch (r) {
        case Route::Algebraic: return "algebraic";
        case Route::Geometric: return "geometric";
        case Route::Pointwise: return "pointwise";
    }
    return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
    for (Route r : kAllRoutes) {
        if (route_name(r) == name) return r;
    }
    return std::nullopt;
}

VerificationReport verify_algebraic(int p, std::uint64_t n) {
    require_cell(p, n);
    auto r = start_report(Route::Algebraic, p, n);
    for (int l = 0; l < p; ++l) {
        Count fc = facet_count(p, l);
        Count pts = figurate(p - l, n);
        SignedCount term = alternate(l, (fc * pts).value());
        r.rhs += term;
        r.terms.push_back({l, std::move(fc), std::move(pts), std::move(term)});
    }
    if (r.rhs != rhs_identity(p, n)) throw InternalError("verify_algebraic: term sum disagrees with rhs_identity");
    r.ok = r.lhs.as_signed() == r.rhs;
    return r;
}

VerificationReport verify_geometric(int p, std::uint64_t n, const Budget& budget) {
    require_cell(p, n);
    auto r = start_report(Route::Geometric, p, n);
    for (int l = 0; l < p; ++l) {
        const auto facets = enumerate_facets(p, l, budget);
        std::optional<std::uint64_t> per_facet;
        std::uint64_t total = 0;
        for (const auto& f : facets) {
            FacetPointStream stream(f, n, budget);
            std::uint64_t here = 0;
            while (stream.next()) ++here;
            if (per_facet && *per_facet != here) {
                throw InternalError("verify_geometric: facets " + facets.front().str() + " and " + f.str() +
                                    " of equal block count hold different point counts");
            }
            per_facet = here;
            total += here;
        }
        r.enumerated_points += total;
        SignedCount term = alternate(l, BigInt(total));
        r.rhs += term;
        r.terms.push_back({l, Count{static_cast<std::uint64_t>(facets.size())}, Count{per_facet.value_or(0)},
                           std::move(term)});
    }
    r.ok = r.lhs.as_signed() == r.rhs;
    return r;
}

VerificationReport verify_pointwise(int p, std::uint64_t n, const Budget& budget) {
    require_cell(p, n);
    auto r = start_report(Route::Pointwise, p, n);
    CubeScan scan(p, n, budget);
    const FacetCatalog catalog(p, budget);
    bool all_one = true;
    while (auto pt = scan.next()) {
        const SignedCount m = point_multiplicity(*pt, catalog);
        ++r.enumerated_points;
        r.rhs += m;
        if (m != 1 && all_one) {
            all_one = false;
            r.first_failure = *pt;
        }
    }
    r.ok = all_one && r.lhs.as_signed() == r.rhs;
    return r;
}

VerificationReport verify(Route route, int p, std::uint64_t n, const Budget& budget) {
    switch (route) {
        case Route::Algebraic: return verify_algebraic(p, n);
        case Route::Geometric: return verify_geometric(p, n, budget);
        case Route::Pointwise: return verify_pointwise(p, n, budget);
    }
    throw InternalError("verify: unknown route");
}

std::vector<SweepCell> sweep(const SweepGrid& grid, const Budget& budget, unsigned threads) {
    std::vector<SweepCell> cells;
    for (int p = grid.p_min; p <= grid.p_max; ++p) {
        for (std::uint64_t n = grid.n_min; n <= grid.n_max; ++n) {
            for (Route route : grid.routes) cells.push_back({p, n, route, std::nullopt, {}});
        }
    }
    for (const auto& c : cells) require_cell(c.p, c.n);

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(cells.size());
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            auto& c = cells[i];
            try {
                c.report = verify(c.route, c.p, c.n, budget);
            } catch (const ResourceError& e) {
                c.error = e.what();
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return cells;
}

std::vector<SweepCell> sweep(int p_max, std::uint64_t n_max, const std::vector<Route>& routes, const Budget& budget,
                             unsigned threads) {
    return sweep(SweepGrid{1, p_max, 1, n_max, routes}, budget, threads);
}

}  // namespace figulat
