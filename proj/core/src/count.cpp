#include "figulat/count.hpp"

#include <ostream>

#include "figulat/budget.hpp"
#include "figulat/errors.hpp"

namespace figulat {

Count::Count(BigInt v) : value_(std::move(v)) {
    if (value_ < 0) throw DomainError("Count must be nonnegative, got " + value_.str());
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value(); }

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > kMax / base) return kMax;
        r *= base;
    }
    return r;
}

std::uint64_t raw_expression_total(int p) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (p < 1) return 0;
    std::uint64_t r = saturating_pow(2, static_cast<unsigned>(p - 1));
    for (int i = 2; i <= p; ++i) {
        if (r > kMax / static_cast<std::uint64_t>(i)) return kMax;
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

}  // namespace figulat
