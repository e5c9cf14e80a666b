#include "hypfn/examples.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hypfn/errors.hpp"
#include "hypfn/hyp_core.hpp"

namespace hypfn::examples {

namespace {

double coth_sq_one() {
    const double c = 1.0 / std::tanh(1.0);
    return c * c;
}

fn::StructureWindow chain_lengths(long n_max, bool recut) {
    std::vector<fn::FNCoordinate> entries;
    entries.push_back(fn::FNCoordinate::boundary(1.0));
    for (long n = 1; n <= n_max; ++n) {
        const double cut = recut ? 2.0 * pants1_arc_length(static_cast<double>(n)).l : static_cast<double>(n);
        entries.push_back(fn::FNCoordinate::interior(cut, 0.0));
        entries.push_back(n == n_max ? fn::FNCoordinate::boundary(1.0) : fn::FNCoordinate::interior(1.0, 0.0));
    }
    return fn::StructureWindow::from_table(std::move(entries));
}

fn::PantsGraph chain_graph(long n_max, bool recut) {
    fn::PantsGraph g;
    g.curves[1] = {true};
    for (long n = 1; n <= n_max; ++n) {
        const auto cut = static_cast<std::size_t>(2 * n);
        const auto left = static_cast<std::size_t>(n == 1 ? 1 : 2 * n - 1);
        const auto right = static_cast<std::size_t>(2 * n + 1);
        g.curves[cut] = {false};
        g.curves[right] = {n == n_max};
        using fn::Slot;
        if (recut) {
            g.pants.push_back({cut - 1, {Slot::cusp(), Slot::cusp(), Slot::of(cut)}});
            g.pants.push_back({cut, {Slot::of(left), Slot::of(right), Slot::of(cut)}});
        } else {
            g.pants.push_back({cut - 1, {Slot::cusp(), Slot::of(left), Slot::of(cut)}});
            g.pants.push_back({cut, {Slot::cusp(), Slot::of(right), Slot::of(cut)}});
        }
    }
    return g;
}

}  // namespace

std::string to_string(ExampleKind k) {
    switch (k) {
        case ExampleKind::Pants1: return "pants1";
        case ExampleKind::Fn1: return "fn1";
        case ExampleKind::Fn2: return "fn2";
    }
    return "?";
}

ExampleKind example_kind_from_string(const std::string& s) {
    for (auto k : {ExampleKind::Pants1, ExampleKind::Fn1, ExampleKind::Fn2}) {
        if (to_string(k) == s) return k;
    }
    throw UsageError("unknown example kind '" + s + "' (expected pants1, fn1 or fn2)");
}

ExampleSpec ExampleSpec::make(ExampleKind kind, long n, std::size_t window) {
    if (n < 1) throw DomainError("example parameter n must be >= 1");
    if (window < static_cast<std::size_t>(n)) throw UsageError("window must be >= n");
    return {kind, n, window};
}

ArcLength pants1_arc_length(double n) {
    if (!(n >= 1.0) || !std::isfinite(n)) throw DomainError("pants1 arc length requires finite n >= 1");
    // cosh l = coth n + cosh 1 / sinh n = 1 + delta; coth n - 1 = 2 / expm1(2n), 1 / sinh n = -2 e^-n / expm1(-2n)
    const double delta = 2.0 / std::expm1(2.0 * n) - 2.0 * std::cosh(1.0) * std::exp(-n) / std::expm1(-2.0 * n);
    ArcLength a;
    a.cosh_sq = (1.0 + delta) * (1.0 + delta);
    a.l = hyp::arcosh1p(delta);
    a.bound_3coth = 3.0 * coth_sq_one();
    a.bound_4coth = 4.0 * coth_sq_one();
    return a;
}

std::pair<fn::StructureWindow, fn::StructureWindow> make_fn_pair(ExampleKind kind, long n, std::size_t window) {
    if (kind == ExampleKind::Pants1) throw UsageError("pants1 is not a structure pair; use pants1_graph");
    const auto spec = ExampleSpec::make(kind, n, window);
    using fn::GeneratorKind;
    const auto gx = fn::StructureGenerator::make(kind == ExampleKind::Fn1 ? GeneratorKind::ExFn1X : GeneratorKind::ExFn2X, n);
    const auto gy = fn::StructureGenerator::make(kind == ExampleKind::Fn1 ? GeneratorKind::ExFn1Y : GeneratorKind::ExFn2Y, n);
    return {fn::StructureWindow::from_generator(gx, spec.window), fn::StructureWindow::from_generator(gy, spec.window)};
}

Pants1Chain pants1_graph(long n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (n_max > kPants1MaxBlocks) {
        throw DomainError("n_max above " + std::to_string(kPants1MaxBlocks) + ": re-cut lengths underflow");
    }
    return {n_max, chain_graph(n_max, false), chain_graph(n_max, true), chain_lengths(n_max, false),
            chain_lengths(n_max, true)};
}

fn::StructureWindow pants1_original_lengths(long n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    return chain_lengths(n_max, false);
}

double pants1_recut_cap() { return std::max(1.0, 2.0 * pants1_arc_length(1.0).l); }

Witness pants1_original_witness(double M) {
    if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("M must be finite and > 0");
    const double n = std::floor(M) + 1.0;
    return {static_cast<std::size_t>(2.0 * n), n};
}

}  // namespace hypfn::examples
