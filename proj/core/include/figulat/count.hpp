#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace figulat {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed integer. Alternating sums and multiplicities live here.
using SignedCount = BigInt;

// Exact nonnegative integer. Every cardinality in the library is a Count;
// construction from a negative value throws DomainError.
class Count {
public:
    Count() = default;
    Count(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Count(BigInt v);

    const BigInt& value() const noexcept { return value_; }
    SignedCount as_signed() const { return value_; }
    std::string str() const { return value_.str(); }

    Count& operator+=(const Count& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Count& operator*=(const Count& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
    friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }

    friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const Count& c);

}  // namespace figulat
