#include "hypfn/fn_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "hypfn/errors.hpp"

namespace hypfn::fn {

namespace {

void require_length(double l) {
    if (!std::isfinite(l) || !(l > 0.0)) throw DomainError("curve length must be finite and > 0");
}

void require_matching(const StructureWindow& x, const StructureWindow& y) {
    if (x.size() != y.size()) {
        throw UsageError("windows differ in size (" + std::to_string(x.size()) + " vs " + std::to_string(y.size()) +
                         ")");
    }
    for (std::size_t i = 1; i <= x.size(); ++i) {
        if (x.at(i).is_boundary() != y.at(i).is_boundary()) {
            throw UsageError("curve " + std::to_string(i) + " is a boundary curve in one structure only");
        }
    }
}

// Per-curve terms of the three distances. The length term is a difference of logs so that
// the distance and the sup-norm of the embedding share arithmetic.
double curve_term(const FNCoordinate& a, const FNCoordinate& b, DistanceKind kind) {
    const double length_term = kind == DistanceKind::RawLength ? std::abs(a.length - b.length)
                                                                : std::abs(std::log(a.length) - std::log(b.length));
    if (a.is_boundary()) return length_term;
    const double twist_term = kind == DistanceKind::RawTwist ? std::abs(*a.twist - *b.twist)
                                                             : std::abs(a.length * *a.twist - b.length * *b.twist);
    return std::max(length_term, twist_term);
}

}  // namespace

FNCoordinate FNCoordinate::interior(double length, double twist) {
    require_length(length);
    if (!std::isfinite(twist)) throw DomainError("twist must be finite");
    return {length, twist};
}

FNCoordinate FNCoordinate::boundary(double length) {
    require_length(length);
    return {length, std::nullopt};
}

std::string to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::Constant: return "constant";
        case GeneratorKind::ExFn1X: return "ex_fn1_x";
        case GeneratorKind::ExFn1Y: return "ex_fn1_y";
        case GeneratorKind::ExFn2X: return "ex_fn2_x";
        case GeneratorKind::ExFn2Y: return "ex_fn2_y";
        case GeneratorKind::Table: return "table";
    }
    return "?";
}

GeneratorKind generator_kind_from_string(const std::string& s) {
    for (auto k : {GeneratorKind::Constant, GeneratorKind::ExFn1X, GeneratorKind::ExFn1Y, GeneratorKind::ExFn2X,
                   GeneratorKind::ExFn2Y, GeneratorKind::Table}) {
        if (to_string(k) == s) return k;
    }
    throw UsageError("unknown generator kind '" + s + "'");
}

StructureGenerator StructureGenerator::make(GeneratorKind kind, long n) {
    if (kind == GeneratorKind::Table) throw UsageError("a table is a literal structure file, not a generator");
    if (n < 1) throw DomainError("generator parameter n must be >= 1");
    return {kind, n};
}

FNCoordinate StructureGenerator::at(std::size_t index) const {
    if (index == 0) throw UsageError("curve indices are 1-based");
    const bool special = index == static_cast<std::size_t>(n);
    const double nn = static_cast<double>(n);
    switch (kind) {
        case GeneratorKind::Constant: break;
        case GeneratorKind::ExFn1X:
        case GeneratorKind::ExFn2X:
            if (special) return FNCoordinate::interior(1.0 / nn, 0.0);
            break;
        case GeneratorKind::ExFn1Y:
            if (special) return FNCoordinate::interior(1.0 / nn, 2.0 * std::numbers::pi);
            break;
        case GeneratorKind::ExFn2Y:
            if (special) return FNCoordinate::interior(1.0 / (nn * nn), 0.0);
            break;
        case GeneratorKind::Table: throw UsageError("table is not a generator");
    }
    return FNCoordinate::interior(1.0, 0.0);
}

std::size_t StructureGenerator::tail_start() const {
    return kind == GeneratorKind::Constant ? 1 : static_cast<std::size_t>(n) + 1;
}

double StructureGenerator::sup_length() const { return 1.0; }

StructureWindow StructureWindow::from_table(std::vector<FNCoordinate> entries) {
    for (const auto& e : entries) require_length(e.length);
    StructureWindow w;
    w.entries_ = std::move(entries);
    return w;
}

StructureWindow StructureWindow::from_generator(const StructureGenerator& g, std::size_t window) {
    if (window == 0) throw UsageError("window must be >= 1");
    StructureWindow w;
    w.generator_ = g;
    w.entries_.reserve(window);
    for (std::size_t i = 1; i <= window; ++i) w.entries_.push_back(g.at(i));
    return w;
}

const FNCoordinate& StructureWindow::at(std::size_t index) const {
    if (index == 0 || index > entries_.size()) {
        throw UsageError("curve index " + std::to_string(index) + " outside window [1, " +
                         std::to_string(entries_.size()) + "]");
    }
    return entries_[index - 1];
}

bool StructureWindow::covers_tail() const { return !generator_ || size() + 1 >= generator_->tail_start(); }

std::string to_string(DistanceKind k) {
    switch (k) {
        case DistanceKind::FenchelNielsen: return "fn";
        case DistanceKind::RawTwist: return "raw-twist";
        case DistanceKind::RawLength: return "raw-length";
    }
    return "?";
}

DistanceKind distance_kind_from_string(const std::string& s) {
    for (auto k : {DistanceKind::FenchelNielsen, DistanceKind::RawTwist, DistanceKind::RawLength}) {
        if (to_string(k) == s) return k;
    }
    throw UsageError("unknown metric '" + s + "' (expected fn, raw-twist or raw-length)");
}

Distance fn_distance_variant(const StructureWindow& x, const StructureWindow& y, DistanceKind kind) {
    require_matching(x, y);
    Distance d;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const double term = curve_term(x.at(i), y.at(i), kind);
        if (term > d.value) {
            d.value = term;
            d.attained_at = i;
        }
    }
    d.exact = x.covers_tail() && y.covers_tail();
    return d;
}

Distance fn_distance(const StructureWindow& x, const StructureWindow& y) {
    return fn_distance_variant(x, y, DistanceKind::FenchelNielsen);
}

std::vector<LinfPair> to_linf(const StructureWindow& x) {
    std::vector<LinfPair> out;
    out.reserve(x.size());
    for (const auto& e : x.entries()) {
        LinfPair p{std::log(e.length), std::nullopt};
        if (e.twist) p.length_twist = e.length * *e.twist;
        out.push_back(p);
    }
    return out;
}

double sup_norm_distance(const std::vector<LinfPair>& a, const std::vector<LinfPair>& b) {
    if (a.size() != b.size()) throw UsageError("embedded sequences differ in length");
    double sup = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].length_twist.has_value() != b[i].length_twist.has_value()) {
            throw UsageError("embedded sequences differ in boundary pattern at index " + std::to_string(i + 1));
        }
        sup = std::max(sup, std::abs(a[i].log_length - b[i].log_length));
        if (a[i].length_twist) sup = std::max(sup, std::abs(*a[i].length_twist - *b[i].length_twist));
    }
    return sup;
}

UpperBoundResult is_upper_bounded(const StructureWindow& x, double M) {
    if (!(M > 0.0)) throw DomainError("upper-bound constant M must be > 0");
    if (x.generator()) {
        auto r = is_upper_bounded(*x.generator(), M);
        return r;
    }
    UpperBoundResult r;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const double l = x.at(i).length;
        r.sup_length = std::max(r.sup_length, l);
        if (l > M && !r.witness) r.witness = i;
    }
    r.bounded = !r.witness.has_value();
    r.closed_form = true;  // a table is the whole structure
    r.complete = r.bounded;
    return r;
}

UpperBoundResult is_upper_bounded(const StructureGenerator& g, double M) {
    if (!(M > 0.0)) throw DomainError("upper-bound constant M must be > 0");
    UpperBoundResult r;
    r.sup_length = g.sup_length();
    r.closed_form = true;
    r.bounded = r.sup_length <= M;
    // every built-in sequence has length 1 at index 1 or 1/n with n = 1 there
    if (!r.bounded) r.witness = 1;
    r.complete = r.bounded;
    return r;
}

WolpertResult wolpert_check(double lx, double ly, double K) {
    require_length(lx);
    require_length(ly);
    if (!std::isfinite(K) || !(K >= 1.0)) throw DomainError("dilatation K must be finite and >= 1");
    WolpertResult r;
    r.pass = ly <= K * lx && lx <= K * ly;
    r.slack = std::log(K) - std::abs(std::log(lx) - std::log(ly));
    return r;
}

VerificationReport validate_pants_graph(const PantsGraph& g) {
    VerificationReport rep;
    rep.subject = "pants graph";
    rep.tolerance = 0.0;
    auto condition = [&](std::string name, NamedValues in, bool ok, std::string note) {
        auto& c = rep.add(std::move(name), std::move(in), ok ? 0.0 : -1.0, 0.0);
        if (!ok) c.note = std::move(note);
    };

    std::map<std::size_t, std::vector<std::size_t>> incidence;  // curve -> pants ids (one entry per slot)
    std::set<std::size_t> pants_ids;
    for (const auto& p : g.pants) {
        const double pid = static_cast<double>(p.id);
        condition("pants id unique", {{"pants", pid}}, pants_ids.insert(p.id).second,
                  "pants " + std::to_string(p.id) + " declared twice");
        for (const auto& s : p.slots) {
            if (s.is_cusp()) continue;
            const bool known = g.curves.count(*s.curve) > 0;
            condition("slot references a declared curve", {{"pants", pid}, {"curve", static_cast<double>(*s.curve)}},
                      known, "pants " + std::to_string(p.id) + " references undeclared curve " + std::to_string(*s.curve));
            incidence[*s.curve].push_back(p.id);
        }
    }
    for (const auto& [id, info] : g.curves) {
        const auto it = incidence.find(id);
        const std::size_t n = it == incidence.end() ? 0 : it->second.size();
        const NamedValues in{{"curve", static_cast<double>(id)}, {"slots", static_cast<double>(n)}};
        if (info.boundary) {
            condition("boundary curve has exactly one slot", in, n == 1,
                      "boundary curve " + std::to_string(id) + " has " + std::to_string(n) + " incident slots");
        } else {
            condition("curve has one or two slots", in, n == 1 || n == 2,
                      "curve " + std::to_string(id) + " has " + std::to_string(n) + " incident slots");
        }
    }
    return rep;
}

}  // namespace hypfn::fn
