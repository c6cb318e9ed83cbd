#pragma once

#include <stdexcept>
#include <string>

namespace crithg {

// Infeasible parameters, violated preconditions, out-of-range requests.
// CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A requested construction or enumeration would exceed a configured cap.
// Carries the exact predicted cost (big-integer, as text) so callers can report it.
struct CapExceededError : DomainError {
    CapExceededError(const std::string& what, std::string predicted)
        : DomainError(what), predicted_cost(std::move(predicted)) {}
    std::string predicted_cost;
};

// Malformed input files / JSON. CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace crithg
