#include "hypfn/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <tuple>
#include <map>
#include <numbers>

#include "hypfn/bounds.hpp"
#include "hypfn/cli/format.hpp"
#include "hypfn/cli/grid.hpp"
#include "hypfn/conformal.hpp"
#include "hypfn/errors.hpp"
#include "hypfn/examples.hpp"
#include "hypfn/fn_space.hpp"
#include "hypfn/hyp_core.hpp"
#include "hypfn/rng.hpp"
#include "hypfn/twist.hpp"

namespace hypfn::cli {

namespace {

using std::numbers::pi;

constexpr std::uint64_t kSeed = 0x5eed2026;
constexpr std::size_t kShownFailures = 20;

class Collector {
public:
    Collector(SuiteResult& r, bool keep) : r_(r), keep_(keep) {}

    /// lhs >= rhs - tol, or lhs > rhs when strict.
    void add(const std::string& check, const NamedValues& in, double lhs, double rhs, double tol = 0.0,
             bool strict = false) {
        SuiteRow row{check, in, lhs, rhs, lhs - rhs, true};
        row.pass = strict ? row.slack > 0.0 : row.slack >= -tol;
        record(std::move(row));
    }

    void condition(const std::string& check, const NamedValues& in, bool ok) {
        record({check, in, ok ? 1.0 : 0.0, 1.0, ok ? 0.0 : -1.0, ok});
    }

    /// |value - expected| <= tol, recorded as tol >= error.
    void close(const std::string& check, const NamedValues& in, double value, double expected, double tol) {
        const double err = std::abs(value - expected);
        SuiteRow row{check, in, tol, err, tol - err, err <= tol};
        record(std::move(row));
    }

    void absorb(const VerificationReport& rep) {
        for (const auto& c : rep.checks) {
            if (c.status == CheckStatus::Skip) {
                ++r_.skipped;
                continue;
            }
            record({c.name, c.inputs, c.lhs, c.rhs, c.slack, c.status == CheckStatus::Pass});
        }
    }

private:
    void record(SuiteRow row) {
        ++r_.total;
        if (!std::isnan(row.slack)) r_.min_slack = r_.min_slack ? std::min(*r_.min_slack, row.slack) : row.slack;
        if (!row.pass) r_.failures.push_back(row);
        if (keep_) r_.rows.push_back(std::move(row));
    }

    SuiteResult& r_;
    bool keep_;
};

std::vector<Axis> resolve_axes(std::vector<Axis> defaults, const std::vector<std::string>& overrides,
                               const std::string& suite) {
    if (overrides.size() > defaults.size()) {
        throw UsageError("suite " + suite + " has " + std::to_string(defaults.size()) + " grid axes, got " +
                         std::to_string(overrides.size()) + " --grid values");
    }
    for (std::size_t i = 0; i < overrides.size(); ++i) {
        const Spacing sp = defaults[i].explicit_values.empty() ? defaults[i].spacing : Spacing::Log;
        defaults[i] = parse_axis(defaults[i].name, overrides[i], sp);
    }
    return defaults;
}

void describe(SuiteResult& r, const std::vector<Axis>& axes) {
    for (const auto& a : axes) r.grid.push_back(a.describe());
}

void suite_collar(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "collars of width B(l) around the boundary geodesics of a pair of pants are embedded and disjoint";
    const auto ax = resolve_axes({Axis::range("l1", 0.05, 10, 20, Spacing::Log), Axis::range("l2", 0.05, 10, 20, Spacing::Log),
                                  Axis::range("l3", 0.05, 10, 20, Spacing::Log)},
                                 o.grid_overrides, r.name);
    describe(r, ax);
    for (double l1 : ax[0].values())
        for (double l2 : ax[1].values())
            for (double l3 : ax[2].values()) c.absorb(hyp::verify_pants_collar(hyp::PantsBoundaryLengths::make(l1, l2, l3)));
}

void suite_hexagon(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "right-angled hexagon side duality: alternate sides a determine b, and b determines a";
    const auto ax = resolve_axes({Axis::range("a1", 0.05, 10, 15, Spacing::Log), Axis::range("a2", 0.05, 10, 15, Spacing::Log),
                                  Axis::range("a3", 0.05, 10, 15, Spacing::Log)},
                                 o.grid_overrides, r.name);
    describe(r, ax);
    for (double a1 : ax[0].values())
        for (double a2 : ax[1].values())
            for (double a3 : ax[2].values()) {
                const auto b = hyp::hexagon_sides(hyp::HexagonAlternatingSides::make(a1, a2, a3));
                const auto back = hyp::hexagon_sides(hyp::HexagonAlternatingSides::make(b[0], b[1], b[2]));
                const std::array<double, 3> a{a1, a2, a3};
                const NamedValues in{{"a1", a1}, {"a2", a2}, {"a3", a3}};
                double worst = 0.0;
                for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(back[i] - a[i]) / a[i]);
                c.close("a -> b -> a relative error", in, worst, 0.0, 1e-9);
            }
}

void suite_mu(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "Groetzsch modulus mu(r) above its logarithmic lower bound, mu' and h' against finite differences, "
                  "h(0) = 1 and h strictly increasing";
    const auto ax = resolve_axes({Axis::range("r", 0.01, 0.99, 99, Spacing::Linear), Axis::range("t", 0.0, 20.0, 2001, Spacing::Linear)},
                                 o.grid_overrides, r.name);
    describe(r, ax);
    for (double x : ax[0].values()) {
        const NamedValues in{{"r", x}};
        c.add("mu(r) >= (2/pi) log((1 + r')^2 / r)", in, conformal::grotzsch_mu(x), conformal::grotzsch_mu_lower_bound(x));
        if (x >= 0.05 && x <= 0.95) {
            const double step = 1e-5;
            const double fd = (conformal::grotzsch_mu(x + step) - conformal::grotzsch_mu(x - step)) / (2.0 * step);
            const double an = conformal::grotzsch_mu_prime(x);
            c.close("mu'(r) vs central difference, relative", in, std::abs(an - fd) / std::abs(fd), 0.0, 1e-6);
        }
    }
    c.close("mu(1/sqrt 2) = pi/2", {{"r", std::sqrt(0.5)}}, conformal::grotzsch_mu(std::sqrt(0.5)), 0.5 * pi, 1e-10);
    c.close("h(0) = 1", {{"t", 0.0}}, conformal::h_of_t(0.0), 1.0, 1e-9);

    const auto ts = ax[1].values();
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        c.add("h(t_next) > h(t)", {{"t", ts[k]}, {"t_next", ts[k + 1]}}, conformal::h_of_t(ts[k + 1]), conformal::h_of_t(ts[k]),
              0.0, true);
    }
    for (double t : ts) {
        if (t < 0.05) continue;
        const double step = 1e-5 * std::max(1.0, t);
        const double fd = (conformal::h_of_t(t + step) - conformal::h_of_t(t - step)) / (2.0 * step);
        c.close("h'(t) vs central difference, relative", {{"t", t}}, std::abs(conformal::h_derivative(t) - fd) / fd, 0.0, 1e-6);
    }
    const double printed = conformal::h_derivative_without_inner_factor(1.0);
    r.findings.push_back("the printed derivative of h omits the inner factor e^t of dr/dt: at t = 1 it gives " + num(printed) +
                         " against " + num(conformal::h_derivative(1.0)) + "; the corrected form is checked above");
}

void suite_twist_lower(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "the constructed collar twist has dilatation at least h(t), the lower bound for its homotopy class";
    const auto ax = resolve_axes({Axis::range("l", 0.1, 5, 50, Spacing::Log), Axis::range("t", 0.2, 10, 50, Spacing::Linear)},
                                 o.grid_overrides, r.name);
    describe(r, ax);
    for (double l : ax[0].values())
        for (double t : ax[1].values()) c.absorb(twist::twist_lower_bound_check(twist::TwistScenario::make(l, t)));
}

void suite_delta(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "t <= delta log h(t) on (0, T] where h(T) = L";
    const auto ax = resolve_axes({Axis::list("L", {1.5, 2.0, 5.0, 10.0})}, o.grid_overrides, r.name);
    describe(r, ax);
    r.grid.push_back("t = T k / 100, k = 1..100");
    for (double L : ax[0].values()) {
        const auto d = twist::twist_delta(L);
        c.close("h(T) = L", {{"L", L}}, conformal::h_of_t(d.T), L, 1e-12 * L);
        for (int k = 1; k <= 100; ++k) {
            const double t = d.T * k / 100.0;
            c.add("delta log h(t) >= t", {{"L", L}, {"t", t}}, d.delta * std::log(conformal::h_of_t(t)), t, 1e-12);
        }
    }
}

void suite_angle(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "seam-dual geodesics meet short curves at a definite angle; the cross-ratio quantity equals e^{2 d(i, A)}";
    const auto ax = resolve_axes({Axis::range("c", 0.01, 10, 20, Spacing::Log), Axis::range("theta", 0.05, 1.5, 20, Spacing::Linear),
                                  Axis::range("M", 0.01, 20, 50, Spacing::Log)},
                                 o.grid_overrides, r.name);
    describe(r, ax);
    std::size_t squared_failures = 0, quantity_failures = 0, points = 0;
    NamedValues first_squared_failure;
    for (double cot : ax[0].values())
        for (double th : ax[1].values()) {
            if (!(th > 0.0 && th < 0.5 * pi)) continue;
            const auto k = twist::seam_angle_kit(cot, th);
            const NamedValues in{{"c", cot}, {"theta", th}};
            ++points;
            c.close("cross-ratio quantity = e^{2d}, relative", in, k.exp_form_error, 0.0, 1e-9);
            const double scale = 1.0 + k.instance.lambda * k.instance.lambda;
            c.close("A lies on x^2 + y^2 - 2 c x - 1 = 0", in, k.circle_residual / scale, 0.0, 1e-13);
            if (!k.bound_holds_for_quantity) ++quantity_failures;
            if (!k.bound_holds_for_distance_squared) {
                if (squared_failures++ == 0) first_squared_failure = in;
            }
        }
    r.findings.push_back("lower bound (2/3) c^2 sin^6 / cos^2 for the cross-ratio quantity e^{2d}: fails at " +
                         std::to_string(quantity_failures) + " of " + std::to_string(points) + " points");
    r.findings.push_back("same bound read as d^2: fails at " + std::to_string(squared_failures) + " of " + std::to_string(points) +
                         " points" + (squared_failures ? " (first at " + named(first_squared_failure) + ")" : std::string()));

    const auto Ms = ax[2].values();
    std::size_t increases = 0, decreases = 0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (double M : Ms) {
        const double phi = twist::seam_angle_bound(M);
        c.add("seam angle bound > 0", {{"M", M}}, phi, 0.0, 0.0, true);
        c.add("seam angle bound <= pi/2", {{"M", M}}, 0.5 * pi, phi, 1e-15);
        if (!std::isnan(prev)) (phi > prev ? increases : decreases) += phi != prev;
        prev = phi;
    }
    r.findings.push_back("seam angle bound along the M axis: " + std::to_string(increases) + " increases, " +
                         std::to_string(decreases) + " decreases (not monotone in M when both are nonzero)");
}

void suite_sandwich(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "d_FN <= (2 + 3C) log K and log K <= d [3C + (1/L) sqrt(1 + d^2/(16 L^2))] never contradict each other";
    std::vector<Axis> defaults{Axis::range("d", 0, 5, 10, Spacing::Linear), Axis::range("N", 0.5, 5, 10, Spacing::Log),
                               Axis::range("C", 0.5, 5, 10, Spacing::Log)};
    if (o.bishop_c) defaults[2] = Axis::list("C", {*o.bishop_c});
    const auto ax = resolve_axes(defaults, o.grid_overrides, r.name);
    describe(r, ax);
    const auto ds = ax[0].values();
    const auto Ns = ax[1].values();
    double prev_L = std::numeric_limits<double>::infinity();
    for (double N : Ns) {
        const double L = bounds::l_of_n(N);
        c.add("L(N) < pi/2", {{"N", N}}, 0.5 * pi, L, 0.0, true);
        c.add("L(N) strictly decreasing", {{"N", N}}, prev_L, L, 0.0, true);
        prev_L = L;
        for (double C : ax[2].values()) {
            const auto a = bounds::BoundAssumptions::make(N, C);
            double prev_upper = 0.0;
            for (double d : ds) {
                const NamedValues in{{"d", d}, {"N", N}, {"C", C}};
                const auto s = bounds::bilipschitz_sandwich(d, a);
                const auto tw = bounds::twist_change_bound(d, a);
                c.add("(2 + 3C) combined(d) >= d", in, *s.fn_from_qc.upper, d);
                c.add("combined(d) >= twist-only(d)", in, *s.qc_from_fn.upper, *tw.upper);
                c.add("combined(d) non-decreasing in d", in, *s.qc_from_fn.upper, prev_upper);
                prev_upper = *s.qc_from_fn.upper;
                bool noted = true;
                for (const auto* rep : {&s.qc_from_fn, &s.fn_from_qc, &tw}) {
                    noted = noted && std::any_of(rep->notes.begin(), rep->notes.end(), [](const std::string& n) {
                                return n.find("2 arctan(2 e^N)") != std::string::npos;
                            });
                }
                c.condition("L(N) discrepancy note present", in, noted);
            }
        }
    }
    const double N0 = std::log(3.0);
    r.findings.push_back("L(N) uses the collar margin: L(log 3) = " + num(bounds::l_of_n(N0)) +
                         "; the printed closed form 2 arctan(2 e^N) gives " + num(bounds::l_of_n_printed(N0)));
}

void suite_example81(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "the re-cut curves of the chain of doubled pants (cusp, 1, n) have bounded length, so the surface is "
                  "upper-bounded for the re-cut decomposition though not for the original one";
    const auto ax = resolve_axes({Axis::range("n", 1, 1e6, 200, Spacing::Log), Axis::list("M", {0.5, 1, 2, 5, 10, 100, 1e4})},
                                 o.grid_overrides, r.name);
    describe(r, ax);
    const auto at_one = examples::pants1_arc_length(1.0);
    c.close("cosh^2 l(1) = 4 coth^2 1", {{"n", 1.0}}, at_one.cosh_sq, at_one.bound_4coth, 1e-9);
    std::size_t above_printed = 0;
    double sup = 0.0, sup_at = 0.0;
    for (double n : ax[0].values()) {
        if (n < 1.0) continue;
        const auto a = examples::pants1_arc_length(n);
        const NamedValues in{{"n", n}};
        c.add("cosh^2 l(n) <= cosh^2 l(1)", in, at_one.cosh_sq, a.cosh_sq, 1e-12);
        c.add("cosh^2 l(n) >= 1", in, a.cosh_sq, 1.0);
        if (a.cosh_sq > a.bound_3coth) ++above_printed;
        if (a.cosh_sq > sup) {
            sup = a.cosh_sq;
            sup_at = n;
        }
    }
    r.findings.push_back("observed sup of cosh^2 l(n) = " + num(sup) + " at n = " + num(sup_at) + "; 4 coth^2 1 = " +
                         num(at_one.bound_4coth) + ", printed bound 3 coth^2 1 = " + num(at_one.bound_3coth) +
                         " is exceeded at " + std::to_string(above_printed) + " grid points");

    for (long n_max : {1L, 5L, 50L}) {
        const auto chain = examples::pants1_graph(n_max);
        const NamedValues in{{"n_max", static_cast<double>(n_max)}};
        c.condition("original pants graph valid", in, fn::validate_pants_graph(chain.original).passed());
        c.condition("re-cut pants graph valid", in, fn::validate_pants_graph(chain.recut).passed());
        const auto ub = fn::is_upper_bounded(chain.recut_lengths, examples::pants1_recut_cap());
        c.condition("re-cut lengths <= max(1, 2 l(1))", in, ub.bounded);
    }
    for (double M : ax[1].values()) {
        const auto w = examples::pants1_original_witness(M);
        const auto lengths = examples::pants1_original_lengths(static_cast<long>(w.index / 2));
        const bool witnessed = lengths.at(w.index).length == w.length && w.length > M;
        c.condition("original decomposition has a curve longer than M", {{"M", M}, {"index", static_cast<double>(w.index)}},
                    witnessed && !fn::is_upper_bounded(lengths, M).bounded);
    }
}

fn::StructureWindow random_window(Rng& rng, const std::vector<bool>& boundary) {
    std::vector<fn::FNCoordinate> e;
    e.reserve(boundary.size());
    for (bool b : boundary) {
        const double l = rng.log_uniform(std::exp(-5.0), std::exp(5.0));
        e.push_back(b ? fn::FNCoordinate::boundary(l) : fn::FNCoordinate::interior(l, rng.uniform(-10.0, 10.0)));
    }
    return fn::StructureWindow::from_table(std::move(e));
}

void suite_metric_axioms(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "d_FN is a pseudometric, equals the sup-norm distance of the embedded coordinates, and takes the "
                  "closed-form values on the fn1/fn2 pairs; the two-sided length distortion test is |log(lx/ly)| <= log K";
    const auto ax = resolve_axes({Axis::range("n", 1, 100, 100, Spacing::Linear), Axis::range("lx", 0.1, 10, 10, Spacing::Log),
                                  Axis::range("ly", 0.1, 10, 10, Spacing::Log), Axis::range("K", 1, 10, 10, Spacing::Log)},
                                 o.grid_overrides, r.name);
    describe(r, ax);
    r.grid.push_back("1000 random window triples, sizes 1..200, seed " + std::to_string(kSeed));

    Rng rng(kSeed);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t size = 1 + rng.index(200);
        std::vector<bool> boundary(size);
        for (std::size_t i = 0; i < size; ++i) boundary[i] = rng.coin(0.1);
        const auto x = random_window(rng, boundary);
        const auto y = random_window(rng, boundary);
        const auto z = random_window(rng, boundary);
        const NamedValues in{{"trial", static_cast<double>(trial)}, {"size", static_cast<double>(size)}};
        const double dxy = fn::fn_distance(x, y).value;
        const double dyz = fn::fn_distance(y, z).value;
        const double dxz = fn::fn_distance(x, z).value;
        c.close("d(x, x) = 0", in, fn::fn_distance(x, x).value, 0.0, 0.0);
        c.close("d(x, y) = d(y, x)", in, dxy, fn::fn_distance(y, x).value, 0.0);
        c.add("d(x, y) + d(y, z) >= d(x, z)", in, dxy + dyz, dxz, 1e-12);
        c.close("d(x, y) = sup-norm of embedded difference", in, dxy, fn::sup_norm_distance(fn::to_linf(x), fn::to_linf(y)), 0.0);
    }

    for (double nv : ax[0].values()) {
        const long n = std::max(1L, std::lround(nv));
        const auto w = static_cast<std::size_t>(n);
        const NamedValues in{{"n", static_cast<double>(n)}};
        const auto [x1, y1] = examples::make_fn_pair(examples::ExampleKind::Fn1, n, w);
        const auto d1 = fn::fn_distance(x1, y1);
        c.close("fn1: d_FN = 2 pi / n", in, d1.value, 2.0 * pi / static_cast<double>(n), 1e-12);
        c.condition("fn1: exact at window n", in, d1.exact);
        c.close("fn1: raw-twist = 2 pi", in, fn::fn_distance_variant(x1, y1, fn::DistanceKind::RawTwist).value, 2.0 * pi, 1e-12);
        const auto [x2, y2] = examples::make_fn_pair(examples::ExampleKind::Fn2, n, w);
        const double nn = static_cast<double>(n);
        c.close("fn2: d_FN = log n", in, fn::fn_distance(x2, y2).value, std::log(nn), 1e-12);
        c.close("fn2: raw-length = 1/n - 1/n^2", in, fn::fn_distance_variant(x2, y2, fn::DistanceKind::RawLength).value,
                1.0 / nn - 1.0 / (nn * nn), 1e-12);
    }

    for (double lx : ax[1].values())
        for (double ly : ax[2].values())
            for (double K : ax[3].values()) {
                if (K < 1.0) continue;
                const auto w = fn::wolpert_check(lx, ly, K);
                const bool agree = w.pass == (w.slack >= 0.0) || std::abs(w.slack) < 1e-12;
                c.condition("length distortion pass iff |log(lx/ly)| <= log K", {{"lx", lx}, {"ly", ly}, {"K", K}}, agree);
            }
}

void suite_distance_oracle(SuiteResult& r, Collector& c, const SuiteOptions& o) {
    r.statement = "hyperbolic distance by the cross-ratio of geodesic endpoints agrees with the cosh formula";
    const auto ax = resolve_axes({Axis::list("pairs", {10000})}, o.grid_overrides, r.name);
    const auto count = static_cast<std::size_t>(std::max(1.0, ax[0].values().front()));
    r.grid.push_back(std::to_string(count) + " random pairs, x uniform in [-10, 10], y log-uniform in [1e-3, 1e3], "
                     "1 in 20 vertically aligned, seed " + std::to_string(kSeed));
    Rng rng(kSeed);
    for (std::size_t k = 0; k < count; ++k) {
        const auto z = hyp::UpperHalfPlanePoint::make(rng.uniform(-10, 10), rng.log_uniform(1e-3, 1e3));
        const double wx = rng.coin(0.05) ? z.x : rng.uniform(-10, 10);
        const auto w = hyp::UpperHalfPlanePoint::make(wx, rng.log_uniform(1e-3, 1e3));
        c.close("cross-ratio distance = cosh-formula distance", {{"zx", z.x}, {"zy", z.y}, {"wx", w.x}, {"wy", w.y}},
                hyp::hyp_distance_cross_ratio(z, w), hyp::hyp_distance(z, w), 1e-10);
    }
}

using SuiteFn = std::function<void(SuiteResult&, Collector&, const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> m{
        {"collar", suite_collar},       {"hexagon", suite_hexagon},
        {"mu", suite_mu},               {"twist-lower", suite_twist_lower},
        {"delta", suite_delta},         {"angle", suite_angle},
        {"sandwich", suite_sandwich},   {"example81", suite_example81},
        {"metric-axioms", suite_metric_axioms}, {"distance-oracle", suite_distance_oracle},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"collar", "hexagon", "mu", "twist-lower", "delta",
                                                "angle", "sandwich", "example81", "metric-axioms", "distance-oracle"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw UsageError("unknown suite '" + name + "'");
    SuiteResult r;
    r.name = name;
    Collector c(r, options.keep_rows);
    const auto start = std::chrono::steady_clock::now();
    it->second(r, c, options);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::sort(r.failures.begin(), r.failures.end(), [](const SuiteRow& a, const SuiteRow& b) {
        std::vector<double> va, vb;
        for (const auto& p : a.inputs) va.push_back(p.second);
        for (const auto& p : b.inputs) vb.push_back(p.second);
        return std::tie(va, a.check) < std::tie(vb, b.check);
    });
    return r;
}

std::string render_suite(const SuiteResult& r) {
    std::string out = "suite " + r.name + "\n";
    out += "statement: " + r.statement + "\n";
    for (const auto& g : r.grid) out += "grid: " + g + "\n";
    out += "checks " + std::to_string(r.total) + " failed " + std::to_string(r.failures.size()) + " skipped " +
           std::to_string(r.skipped) + "\n";
    if (r.min_slack) out += "min_slack " + num(*r.min_slack) + "\n";
    for (const auto& f : r.findings) out += "finding: " + f + "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < kShownFailures; ++i) {
        const auto& f = r.failures[i];
        out += "FAIL " + f.check + " | " + named(f.inputs) + " | lhs=" + num(f.lhs) + " rhs=" + num(f.rhs) +
               " slack=" + num(f.slack) + "\n";
    }
    if (r.failures.size() > kShownFailures) {
        out += "... " + std::to_string(r.failures.size() - kShownFailures) + " more failures\n";
    }
    out += "# wall_seconds " + seconds(r.wall_seconds) + "\n";
    out += std::string("result ") + (r.passed() ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string csv_header() { return "suite,check,inputs,lhs,rhs,slack,status\n"; }

std::string csv_rows(const SuiteResult& r) {
    std::string out;
    for (const auto& row : r.rows) {
        out += r.name + ",\"" + row.check + "\"," + csv_named(row.inputs) + ',' + csv_num(row.lhs) + ',' + csv_num(row.rhs) +
               ',' + csv_num(row.slack) + ',' + (row.pass ? "pass" : "fail") + '\n';
    }
    return out;
}

}  // namespace hypfn::cli
