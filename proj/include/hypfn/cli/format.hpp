#pragma once

#include <string>

#include "hypfn/report.hpp"

namespace hypfn::cli {

/// Fixed-width text output: 16 significant digits, trailing zeros kept.
std::string num(double v);
/// CSV output: 17 significant digits, enough to round-trip.
std::string csv_num(double v);
/// "k=v k=v" with num() values.
std::string named(const NamedValues& values);
/// "k=v;k=v" with csv_num() values, for a single CSV cell.
std::string csv_named(const NamedValues& values);
/// Wall time with millisecond resolution.
std::string seconds(double s);

}  // namespace hypfn::cli
