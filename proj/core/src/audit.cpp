#include "figulat/audit.hpp"

#include <sstream>

#include "figulat/combinatorics.hpp"
#include "figulat/facets.hpp"
#include "figulat/lattice.hpp"
#include "figulat/oracles.hpp"

namespace figulat {
namespace {

template <typename A, typename B>
void compare(AuditResult& r, std::string where, const A& closed_form, const B& oracle) {
    ++r.cases;
    if (!(closed_form == oracle)) {
        std::ostringstream a, b;
        a << closed_form;
        b << oracle;
        r.mismatches.push_back({std::move(where), a.str(), b.str()});
    }
}

std::string at(std::initializer_list<std::pair<const char*, std::string>> parts) {
    std::string s;
    for (const auto& [k, v] : parts) {
        if (!s.empty()) s += ',';
        s += k;
        s += '=';
        s += v;
    }
    return s;
}

}  // namespace

std::vector<AuditResult> audit(const AuditGrid& grid, const Budget& budget) {
    using std::to_string;
    std::vector<AuditResult> out;

    AuditResult stirling{"stirling2-recurrence-vs-inclusion-exclusion", 0, {}};
    for (int m = 0; m <= grid.stirling_m_max; ++m) {
        for (int j = 1; j <= m; ++j) {
            compare(stirling, at({{"m", to_string(m)}, {"j", to_string(j)}}), stirling2_recurrence(m, j),
                    stirling2_inclusion_exclusion(m, j));
        }
    }
    out.push_back(std::move(stirling));

    AuditResult surj{"surjection-count-vs-brute-force", 0, {}};
    for (int m = 0; m <= grid.m_max; ++m) {
        for (int j = 0; j <= m; ++j) {
            compare(surj, at({{"m", to_string(m)}, {"j", to_string(j)}}), surjection_count(m, j),
                    Count{static_cast<std::uint64_t>(oracle::surjections(m, j, budget).size())});
        }
    }
    out.push_back(std::move(surj));

    AuditResult bell{"stirling2-row-sum-vs-set-partitions", 0, {}};
    for (int m = 0; m <= grid.m_max; ++m) {
        Count row;
        for (int j = 0; j <= m; ++j) row += stirling2_recurrence(m, j);
        compare(bell, at({{"m", to_string(m)}}), row,
                Count{static_cast<std::uint64_t>(oracle::set_partitions(m).size())});
    }
    out.push_back(std::move(bell));

    AuditResult fig{"figurate-vs-weakly-decreasing-tuples", 0, {}};
    for (int k = 1; k <= grid.k_max; ++k) {
        for (std::uint64_t n = 1; n <= grid.figurate_n_max; ++n) {
            compare(fig, at({{"k", to_string(k)}, {"n", to_string(n)}}), figurate(k, n),
                    oracle::weakly_decreasing_tuples(k, n, budget));
        }
    }
    out.push_back(std::move(fig));

    AuditResult facets{"facet-enumeration-vs-count-vs-surjections", 0, {}};
    AuditResult bijection{"facet-surjection-round-trip", 0, {}};
    for (int p = 1; p <= grid.facet_p_max; ++p) {
        for (int l = 0; l < p; ++l) {
            const auto enumerated = enumerate_facets(p, l, budget);
            const auto where = at({{"p", to_string(p)}, {"l", to_string(l)}});
            const Count listed{static_cast<std::uint64_t>(enumerated.size())};
            const auto surjections = oracle::surjections(p, p - l, budget);
            compare(facets, where + ",side=closed-form", listed, facet_count(p, l));
            compare(facets, where + ",side=brute-force", listed,
                    Count{static_cast<std::uint64_t>(surjections.size())});
            for (const auto& f : enumerated) {
                compare(bijection, f.str(), surjection_to_facet(facet_to_surjection(f)).str(), f.str());
            }
            for (const auto& s : surjections) {
                compare(bijection, s.str(), facet_to_surjection(surjection_to_facet(s)).str(), s.str());
            }
        }
    }
    out.push_back(std::move(facets));
    out.push_back(std::move(bijection));

    AuditResult lattice{"lattice-count-vs-cube-scan", 0, {}};
    AuditResult cover{"point-multiplicity-vs-signed-cover", 0, {}};
    for (int p = 1; p <= grid.geometry_p_max; ++p) {
        const FacetCatalog catalog(p, budget);
        for (std::uint64_t n = 1; n <= grid.geometry_n_max; ++n) {
            for (int l = 0; l < p; ++l) {
                for (const auto& f : catalog.codimension(l)) {
                    compare(lattice, f.str() + ",n=" + to_string(n), count_lattice_points(f, n),
                            Count{oracle::cube_scan_count(f, n, budget)});
                }
            }
            CubeScan scan(p, n, budget);
            while (auto pt = scan.next()) {
                compare(cover, "p=" + to_string(p) + ",n=" + to_string(n) + ",pt=" + pt->str(),
                        point_multiplicity(*pt, catalog), oracle::signed_cover(*pt, p));
            }
        }
    }
    out.push_back(std::move(lattice));
    out.push_back(std::move(cover));

    return out;
}

}  // namespace figulat
