#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "figulat/budget.hpp"

namespace figulat {

// Bounds for the closed-form versus brute-force comparisons run by audit().
struct AuditGrid {
    int stirling_m_max = 12;     // recurrence vs inclusion-exclusion
    int m_max = 8;               // surjection counts and Bell row sums
    int k_max = 8;               // figurate vs weakly decreasing tuples
    std::uint64_t figurate_n_max = 8;
    int facet_p_max = 7;         // enumerated facets vs c(p,l) vs surjections
    int geometry_p_max = 5;      // lattice counts, cube scans, signed cover
    std::uint64_t geometry_n_max = 4;
};

struct AuditMismatch {
    std::string where;  // e.g. "m=4,j=2"
    std::string closed_form;
    std::string oracle;
};

struct AuditResult {
    std::string check;
    std::uint64_t cases = 0;
    std::vector<AuditMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

// Runs every closed-form/oracle pairing over the grid, in a fixed order.
// Budget errors propagate.
std::vector<AuditResult> audit(const AuditGrid& grid = {}, const Budget& budget = {});

}  // namespace figulat
