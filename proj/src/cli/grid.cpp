#include "hypfn/cli/grid.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hypfn/cli/format.hpp"
#include "hypfn/errors.hpp"

namespace hypfn::cli {

namespace {

double to_real(const std::string& s, const std::string& text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw UsageError("bad grid '" + text + "': '" + s + "' is not a number");
    }
    return v;
}

}  // namespace

Axis Axis::range(std::string name, double lo, double hi, std::size_t steps, Spacing spacing) {
    if (steps == 0) throw UsageError("grid axis " + name + " needs at least one step");
    if (!(lo <= hi)) throw UsageError("grid axis " + name + " needs lo <= hi");
    if (spacing == Spacing::Log && !(lo > 0.0)) throw UsageError("log-spaced axis " + name + " needs lo > 0");
    Axis a;
    a.name = std::move(name);
    a.lo = lo;
    a.hi = hi;
    a.steps = steps;
    a.spacing = spacing;
    return a;
}

Axis Axis::list(std::string name, std::vector<double> values) {
    Axis a;
    a.name = std::move(name);
    a.steps = values.size();
    a.explicit_values = std::move(values);
    return a;
}

std::vector<double> Axis::values() const {
    if (!explicit_values.empty()) return explicit_values;
    std::vector<double> v(steps);
    if (steps == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t i = 0; i < steps; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(steps - 1);
        v[i] = spacing == Spacing::Log ? lo * std::pow(hi / lo, s) : lo + (hi - lo) * s;
    }
    v.back() = hi;
    return v;
}

std::string Axis::describe() const {
    if (!explicit_values.empty()) {
        std::string s = name + " in {";
        for (std::size_t i = 0; i < explicit_values.size(); ++i) s += (i ? ", " : "") + num(explicit_values[i]);
        return s + "}";
    }
    return name + " " + (spacing == Spacing::Log ? "log" : "lin") + " " + num(lo) + ":" + num(hi) + ":" +
           std::to_string(steps);
}

Axis parse_axis(const std::string& name, const std::string& text, Spacing fallback) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() < 3 || parts.size() > 4) throw UsageError("bad grid '" + text + "' (expected lo:hi:steps[:lin|log])");
    Spacing spacing = fallback;
    if (parts.size() == 4) {
        if (parts[3] == "lin") spacing = Spacing::Linear;
        else if (parts[3] == "log") spacing = Spacing::Log;
        else throw UsageError("bad grid '" + text + "': spacing must be lin or log");
    }
    std::size_t steps = 0;
    const auto& s = parts[2];
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), steps);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad grid '" + text + "': steps must be an integer");
    return Axis::range(name, to_real(parts[0], text), to_real(parts[1], text), steps, spacing);
}

}  // namespace hypfn::cli
