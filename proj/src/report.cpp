#include "hypfn/report.hpp"

#include <algorithm>
#include <cmath>

namespace hypfn {

Check& VerificationReport::add(std::string name, NamedValues inputs, double lhs, double rhs,
                               bool intermediate) {
    Check c;
    c.name = std::move(name);
    c.inputs = std::move(inputs);
    c.lhs = lhs;
    c.rhs = rhs;
    // inf - inf is left as NaN and counted as a failure
    c.slack = (std::isinf(lhs) && lhs > 0 && !std::isinf(rhs)) ? lhs : lhs - rhs;
    c.status = (c.slack >= -tolerance) ? CheckStatus::Pass : CheckStatus::Fail;
    c.intermediate = intermediate;
    checks.push_back(std::move(c));
    return checks.back();
}

Check& VerificationReport::skip(std::string name, NamedValues inputs, std::string note) {
    Check c;
    c.name = std::move(name);
    c.inputs = std::move(inputs);
    c.status = CheckStatus::Skip;
    c.note = std::move(note);
    checks.push_back(std::move(c));
    return checks.back();
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s, bool intermediate) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) {
        return c.status == s && c.intermediate == intermediate;
    }));
}

std::optional<double> VerificationReport::min_slack(bool intermediate) const {
    std::optional<double> best;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Skip || c.intermediate != intermediate) continue;
        if (!best || c.slack < *best) best = c.slack;
    }
    return best;
}

}  // namespace hypfn
