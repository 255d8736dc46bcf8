#include <doctest.h>

#include "figulat/audit.hpp"
#include "figulat/errors.hpp"
#include "figulat/verifier.hpp"

using namespace figulat;

namespace {

std::vector<std::string> term_strings(const VerificationReport& r) {
    std::vector<std::string> out;
    for (const auto& t : r.terms) {
        out.push_back(std::to_string(t.l) + ":" + t.facet_count.str() + "x" + t.per_facet_points.str() + "=" +
                      t.signed_term.str());
    }
    return out;
}

}  // namespace

TEST_CASE("verify_algebraic") {
    const auto r = verify_algebraic(3, 2);
    CHECK(r.lhs == Count{8});
    CHECK(r.rhs == 8);
    CHECK(r.ok);
    CHECK(r.enumerated_points == 0);
    CHECK(term_strings(r) == std::vector<std::string>{"0:6x4=24", "1:6x3=-18", "2:1x2=2"});

    const auto one = verify_algebraic(1, 7);
    CHECK(term_strings(one) == std::vector<std::string>{"0:1x7=7"});
    CHECK(one.ok);

    const auto four = verify_algebraic(4, 2);
    CHECK(term_strings(four) == std::vector<std::string>{"0:24x5=120", "1:36x4=-144", "2:14x3=42", "3:1x2=-2"});
    CHECK(four.rhs == 16);

    CHECK_THROWS_AS(verify_algebraic(0, 2), DomainError);
}

TEST_CASE("verify_geometric") {
    const auto r = verify_geometric(2, 2);
    CHECK(term_strings(r) == std::vector<std::string>{"0:2x3=6", "1:1x2=-2"});
    CHECK(r.ok);
    CHECK(r.enumerated_points == 8);
    CHECK(verify_geometric(3, 1).rhs == 1);
    const auto r32 = verify_geometric(3, 2);
    CHECK(r32.rhs == 8);
    CHECK(term_strings(r32) == term_strings(verify_algebraic(3, 2)));

    Budget b;
    b.max_points = 3;
    CHECK_THROWS_AS(verify_geometric(2, 2, b), ResourceError);
}

TEST_CASE("verify_pointwise") {
    const auto r = verify_pointwise(2, 2);
    CHECK(r.ok);
    CHECK(r.terms.empty());
    CHECK(r.enumerated_points == 4);
    CHECK(r.rhs == 4);
    CHECK_FALSE(r.first_failure.has_value());
    for (int p = 1; p <= 6; ++p) CHECK(verify_pointwise(p, 1).ok);
    CHECK(verify_pointwise(3, 2).enumerated_points == 8);
    Budget b;
    b.max_points = 7;
    CHECK_THROWS_AS(verify_pointwise(3, 2, b), ResourceError);
}

TEST_CASE("routes agree and enumerating routes never skip enumeration") {
    for (int p = 1; p <= 4; ++p) {
        for (std::uint64_t n = 1; n <= 4; ++n) {
            const auto a = verify(Route::Algebraic, p, n);
            const auto g = verify(Route::Geometric, p, n);
            const auto w = verify(Route::Pointwise, p, n);
            CHECK(a.rhs == g.rhs);
            CHECK(g.rhs == w.rhs);
            CHECK(a.rhs == a.lhs.as_signed());
            CHECK(a.ok);
            CHECK(g.ok);
            CHECK(w.ok);
            CHECK(g.enumerated_points > 0);
            CHECK(w.enumerated_points > 0);
        }
    }
}

TEST_CASE("sweep") {
    const auto cells = sweep(2, 2, {std::begin(kAllRoutes), std::end(kAllRoutes)});
    REQUIRE(cells.size() == 12);
    for (const auto& c : cells) {
        REQUIRE(c.report);
        CHECK(c.report->ok);
    }
    CHECK(cells[0].p == 1);
    CHECK(cells[0].n == 1);
    CHECK(cells[0].route == Route::Algebraic);
    CHECK(cells[2].route == Route::Pointwise);
    CHECK(cells[3].n == 2);
    CHECK(cells[6].p == 2);

    CHECK(sweep(1, 1, {Route::Algebraic}).size() == 1);
    const auto alg = sweep(4, 3, {Route::Algebraic});
    CHECK(alg.size() == 12);
    for (const auto& c : alg) CHECK(c.report->ok);
}

TEST_CASE("sweep records budget errors per cell without aborting") {
    Budget b;
    b.max_points = 8;
    const auto cells = sweep(SweepGrid{3, 3, 2, 3, {Route::Pointwise, Route::Algebraic}}, b);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].report);  // 2^3 = 8 points fits
    CHECK(cells[1].report);
    CHECK_FALSE(cells[2].report);  // 3^3 = 27 does not
    CHECK(cells[2].error.find("max-points") != std::string::npos);
    CHECK(cells[3].report);
}

TEST_CASE("sweep output is independent of thread count") {
    const SweepGrid grid{1, 4, 1, 3, {std::begin(kAllRoutes), std::end(kAllRoutes)}};
    const auto serial = sweep(grid, {}, 1);
    const auto parallel = sweep(grid, {}, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].p == parallel[i].p);
        CHECK(serial[i].n == parallel[i].n);
        CHECK(serial[i].route == parallel[i].route);
        CHECK(serial[i].report->rhs == parallel[i].report->rhs);
        CHECK(term_strings(*serial[i].report) == term_strings(*parallel[i].report));
    }
}

TEST_CASE("route names") {
    for (Route r : kAllRoutes) CHECK(parse_route(route_name(r)) == r);
    CHECK_FALSE(parse_route("all").has_value());
}

TEST_CASE("audit on a small grid agrees everywhere") {
    AuditGrid g;
    g.stirling_m_max = 6;
    g.m_max = 5;
    g.k_max = 4;
    g.figurate_n_max = 4;
    g.facet_p_max = 4;
    g.geometry_p_max = 3;
    g.geometry_n_max = 3;
    const auto results = audit(g);
    CHECK(results.size() == 8);
    for (const auto& r : results) {
        CAPTURE(r.check);
        CHECK(r.ok());
        CHECK(r.cases > 0);
    }
}
