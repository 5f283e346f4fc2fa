// Error taxonomy shared by the library and the CLI exit-code mapping.
#pragma once

#include <stdexcept>
#include <string>

namespace hopset {

// Bad arguments or violated preconditions.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number when known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number = 0;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds a hard resource limit (oracle cap, integer width).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hopset or report refers to a different graph than the one supplied.
struct FingerprintMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Query is outside the operation's domain (e.g. unreachable pair).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hopset
