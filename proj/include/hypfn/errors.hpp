#pragma once

#include <stdexcept>
#include <string>

namespace hypfn {

/// Argument outside the mathematical domain of a function (r >= 1 for K(r), l <= 0 for a collar, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A stated hypothesis of a bound does not hold for the given data (a length above the cap N, ...).
class AssumptionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller misuse: bad index, mismatched windows, unknown names.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public UsageError {
public:
    ParseError(const std::string& what, std::size_t line)
        : UsageError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace hypfn
