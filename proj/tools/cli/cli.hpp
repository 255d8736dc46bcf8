#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "figulat/budget.hpp"
#include "figulat/verifier.hpp"
#include "records.hpp"

namespace figulat::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitIdentityFailure = 1,  // a report with ok = false, or an audit mismatch
    kExitUsage = 2,
    kExitBudget = 3,  // some cell or listing was skipped for budget reasons
};

struct Range {
    std::uint64_t lo;
    std::uint64_t hi;
};

// "a..b" (inclusive) or a single value "a". Throws std::invalid_argument.
Range parse_range(const std::string& text);

// What the process environment contributes. FIGULAT_MAX_POINTS overrides the
// default point budget; an explicit --max-points flag overrides both.
struct Environment {
    std::optional<std::string> max_points;

    static Environment from_process();
};

// Largest dimension-like argument (p, m, k) the closed-form commands accept.
inline constexpr std::uint64_t kMaxDimension = 20;
inline constexpr std::uint64_t kMaxSide = 1'000'000;

// audit brute-forces all 8^8 maps for the m = 8 surjection row, so its
// default point budget is 8^8 instead of Budget::kDefaultMaxPoints.
inline constexpr std::uint64_t kAuditDefaultMaxPoints = 16'777'216;

std::vector<Record> verification_records(const std::vector<SweepCell>& cells);

// Runs the tool with argv[1..] in args. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace figulat::cli
