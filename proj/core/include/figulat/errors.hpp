#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace figulat {

// An argument outside an operation's mathematical domain (k = 0, l >= p, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured enumeration budget would be exceeded. Carries the name of the
// limit so callers can report which flag to raise.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string limit, std::uint64_t cap, const std::string& what)
        : std::runtime_error(what + " (limit " + limit + " = " + std::to_string(cap) + ")"),
          limit_(std::move(limit)),
          cap_(cap) {}

    const std::string& limit() const noexcept { return limit_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::string limit_;
    std::uint64_t cap_;
};

// A self-check inside the library failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace figulat
