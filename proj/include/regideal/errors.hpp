#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace regideal {

/// Raised for rings where the regular graph of ideals is undefined (fields and
/// other domains).
class DomainRingError : public std::invalid_argument {
public:
    explicit DomainRingError(const std::string& what)
        : std::invalid_argument("domain ring: the regular graph is undefined for domains: " + what) {}
};

/// Malformed ring description (bad profile string, mismatched specs, non-divisors).
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A graph construction would exceed the configured vertex limit.
class GraphTooLarge : public std::length_error {
public:
    GraphTooLarge(std::uint64_t vertex_count, std::uint64_t limit)
        : std::length_error("graph too large: " + std::to_string(vertex_count) +
                            " vertices (limit " + std::to_string(limit) + ")"),
          vertex_count_(vertex_count) {}

    std::uint64_t vertex_count() const noexcept { return vertex_count_; }

private:
    std::uint64_t vertex_count_;
};

} // namespace regideal
