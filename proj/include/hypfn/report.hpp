#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypfn {

using NamedValues = std::vector<std::pair<std::string, double>>;

enum class CheckStatus { Pass, Fail, Skip };

/// One evaluated inequality lhs >= rhs (slack = lhs - rhs), or a skipped one.
struct Check {
    std::string name;
    NamedValues inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    CheckStatus status = CheckStatus::Pass;
    /// Intermediate proof steps are reported but kept apart from the headline checks.
    bool intermediate = false;
    std::string note;
};

/// Result of checking a family of inequalities at one input.
struct VerificationReport {
    std::string subject;
    double tolerance = 0.0;
    std::vector<Check> checks;

    /// Adds lhs >= rhs with the report tolerance on the slack.
    Check& add(std::string name, NamedValues inputs, double lhs, double rhs, bool intermediate = false);
    Check& skip(std::string name, NamedValues inputs, std::string note);

    bool passed() const;  // headline checks only
    std::size_t count(CheckStatus s, bool intermediate = false) const;
    std::optional<double> min_slack(bool intermediate = false) const;
};

/// A certified interval for some quantity, with the hypotheses it rests on.
struct BoundReport {
    std::string quantity;
    std::optional<double> lower;
    std::optional<double> upper;
    NamedValues assumptions;
    std::string provenance;
    std::vector<std::string> notes;
};

}  // namespace hypfn
