#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hypfn::cli {

enum class Spacing { Linear, Log };

/// One grid axis: `steps` points from lo to hi inclusive, or an explicit value list.
struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t steps = 1;
    Spacing spacing = Spacing::Log;
    std::vector<double> explicit_values;

    static Axis range(std::string name, double lo, double hi, std::size_t steps, Spacing spacing);
    static Axis list(std::string name, std::vector<double> values);

    std::vector<double> values() const;
    std::string describe() const;
};

/// Parses `lo:hi:steps[:lin|log]`; the spacing defaults to `fallback`. Throws UsageError.
Axis parse_axis(const std::string& name, const std::string& text, Spacing fallback);

}  // namespace hypfn::cli
