#include "hypfn/cli/format.hpp"

#include <cmath>

#include <fmt/format.h>

namespace hypfn::cli {

namespace {

std::string special(double v) {
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string num(double v) { return std::isfinite(v) ? fmt::format("{:#.16g}", v) : special(v); }

std::string csv_num(double v) { return std::isfinite(v) ? fmt::format("{:.17g}", v) : special(v); }

std::string named(const NamedValues& values) {
    std::string out;
    for (const auto& [k, v] : values) {
        if (!out.empty()) out += ' ';
        out += k + '=' + num(v);
    }
    return out;
}

std::string csv_named(const NamedValues& values) {
    std::string out;
    for (const auto& [k, v] : values) {
        if (!out.empty()) out += ';';
        out += k + '=' + csv_num(v);
    }
    return out;
}

std::string seconds(double s) { return fmt::format("{:.3f}", s); }

}  // namespace hypfn::cli
