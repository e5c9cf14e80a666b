#include "hypfn/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypfn/bounds.hpp"
#include "hypfn/cli/format.hpp"
#include "hypfn/cli/suites.hpp"
#include "hypfn/conformal.hpp"
#include "hypfn/errors.hpp"
#include "hypfn/examples.hpp"
#include "hypfn/fn_io.hpp"
#include "hypfn/hyp_core.hpp"
#include "hypfn/twist.hpp"

namespace hypfn::cli {

namespace {

struct EvalFunction {
    std::vector<std::string> params;
    std::function<NamedValues(const std::vector<double>&)> fn;
};

conformal::ExtendedReal boundary_point(double v) {
    return std::isinf(v) ? conformal::ExtendedReal::infinity() : conformal::ExtendedReal(v);
}

const std::map<std::string, EvalFunction>& eval_table() {
    using V = std::vector<double>;
    static const std::map<std::string, EvalFunction> t{
        {"B", {{"l"}, [](const V& a) { return NamedValues{{"", hyp::collar_margin(a[0])}}; }}},
        {"omega", {{"l"}, [](const V& a) { return NamedValues{{"", hyp::collar_halfwidth(a[0])}}; }}},
        {"theta", {{"d"}, [](const V& a) { return NamedValues{{"", hyp::theta_of_d(a[0])}}; }}},
        {"collar",
         {{"l"},
          [](const V& a) {
              const auto c = hyp::collar_data(a[0]);
              return NamedValues{{"margin", c.margin}, {"halfwidth", c.halfwidth}, {"angle", c.angle}};
          }}},
        {"dist",
         {{"zx", "zy", "wx", "wy"},
          [](const V& a) {
              return NamedValues{{"", hyp::hyp_distance(hyp::UpperHalfPlanePoint::make(a[0], a[1]),
                                                        hyp::UpperHalfPlanePoint::make(a[2], a[3]))}};
          }}},
        {"dist-cr",
         {{"zx", "zy", "wx", "wy"},
          [](const V& a) {
              return NamedValues{{"", hyp::hyp_distance_cross_ratio(hyp::UpperHalfPlanePoint::make(a[0], a[1]),
                                                                    hyp::UpperHalfPlanePoint::make(a[2], a[3]))}};
          }}},
        {"hexagon",
         {{"a1", "a2", "a3"},
          [](const V& a) {
              const auto b = hyp::hexagon_sides(hyp::HexagonAlternatingSides::make(a[0], a[1], a[2]));
              return NamedValues{{"b1", b[0]}, {"b2", b[1]}, {"b3", b[2]}};
          }}},
        {"altitude",
         {{"a1", "a2", "a3"},
          [](const V& a) {
              const auto h = hyp::HexagonAlternatingSides::make(a[0], a[1], a[2]);
              return NamedValues{{"h1", hyp::hexagon_altitude(h, 1)},
                                 {"h2", hyp::hexagon_altitude(h, 2)},
                                 {"h3", hyp::hexagon_altitude(h, 3)}};
          }}},
        {"K", {{"r"}, [](const V& a) { return NamedValues{{"", conformal::elliptic_k(a[0])}}; }}},
        {"mu", {{"r"}, [](const V& a) { return NamedValues{{"", conformal::grotzsch_mu(a[0])}}; }}},
        {"mu-prime", {{"r"}, [](const V& a) { return NamedValues{{"", conformal::grotzsch_mu_prime(a[0])}}; }}},
        {"mu-lower", {{"r"}, [](const V& a) { return NamedValues{{"", conformal::grotzsch_mu_lower_bound(a[0])}}; }}},
        {"h", {{"t"}, [](const V& a) { return NamedValues{{"", conformal::h_of_t(a[0])}}; }}},
        {"h-prime", {{"t"}, [](const V& a) { return NamedValues{{"", conformal::h_derivative(a[0])}}; }}},
        {"h-prime-printed",
         {{"t"}, [](const V& a) { return NamedValues{{"", conformal::h_derivative_without_inner_factor(a[0])}}; }}},
        {"quad",
         {{"p1", "p2", "p3", "p4"},
          [](const V& a) {
              const auto q = conformal::IdealQuadrilateral::make(boundary_point(a[0]), boundary_point(a[1]),
                                                                 boundary_point(a[2]), boundary_point(a[3]));
              return NamedValues{{"modulus", conformal::quad_modulus(q)},
                                 {"extremal_length", conformal::extremal_length(q)},
                                 {"x", conformal::normalized_vertex(q)}};
          }}},
        {"cylinder", {{"b"}, [](const V& a) { return NamedValues{{"", conformal::cylinder_interval(a[0])}}; }}},
        {"affine-k",
         {{"A"},
          [](const V& a) {
              const auto d = conformal::affine_dilatation(a[0]);
              return NamedValues{{"K", d.K}, {"mu", d.beltrami_modulus}};
          }}},
        {"twist-k",
         {{"l", "t"},
          [](const V& a) {
              const auto d = twist::twist_dilatation(twist::TwistScenario::make(a[0], a[1]));
              return NamedValues{{"K", d.K}, {"mu", d.beltrami_modulus}, {"shear", d.shear}};
          }}},
        {"twist-delta",
         {{"L"},
          [](const V& a) {
              const auto d = twist::twist_delta(a[0]);
              return NamedValues{{"T", d.T}, {"D", d.D}, {"M", d.M}, {"delta", d.delta}};
          }}},
        {"seam-angle", {{"M"}, [](const V& a) { return NamedValues{{"", twist::seam_angle_bound(a[0])}}; }}},
        {"seam-kit",
         {{"c", "theta"},
          [](const V& a) {
              const auto k = twist::seam_angle_kit(a[0], a[1]);
              return NamedValues{{"quantity", k.dist_quantity},
                                 {"exp_2d", std::exp(2.0 * k.direct_distance)},
                                 {"d", k.direct_distance},
                                 {"rhs", k.rhs_bound}};
          }}},
        {"L",
         {{"N"},
          [](const V& a) {
              return NamedValues{{"L", bounds::l_of_n(a[0])}, {"L_printed", bounds::l_of_n_printed(a[0])}};
          }}},
        {"arc",
         {{"n"},
          [](const V& a) {
              const auto r = examples::pants1_arc_length(a[0]);
              return NamedValues{{"cosh_sq", r.cosh_sq},
                                 {"l", r.l},
                                 {"bound_3coth", r.bound_3coth},
                                 {"bound_4coth", r.bound_4coth}};
          }}},
    };
    return t;
}

double parse_number(const std::string& s) {
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s[0] == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || std::isnan(v)) {
        throw UsageError("'" + s + "' is not a number");
    }
    return v;
}

int cmd_eval(const std::string& name, const std::vector<std::string>& raw, std::ostream& out) {
    const auto it = eval_table().find(name);
    if (it == eval_table().end()) {
        std::string known;
        for (const auto& [k, _] : eval_table()) known += (known.empty() ? "" : ", ") + k;
        throw UsageError("unknown function '" + name + "' (known: " + known + ")");
    }
    const auto& f = it->second;
    if (raw.size() != f.params.size()) {
        std::string sig;
        for (const auto& p : f.params) sig += " " + p;
        throw UsageError(name + " takes " + std::to_string(f.params.size()) + " argument(s):" + sig);
    }
    std::vector<double> args;
    for (const auto& s : raw) args.push_back(parse_number(s));
    if (name != "quad") {
        for (double v : args) {
            if (!std::isfinite(v)) throw DomainError(name + " requires finite arguments");
        }
    }
    const auto values = f.fn(args);
    if (values.size() == 1 && values[0].first.empty()) {
        out << num(values[0].second) << '\n';
    } else {
        out << named(values) << '\n';
    }
    return kOk;
}

fn::StructureWindow load(const std::string& path, std::size_t window) {
    return fn::materialize(fn::read_structure_file(path), window);
}

int cmd_dist(const std::string& a, const std::string& b, const std::string& metric, std::size_t window, std::ostream& out) {
    const auto kind = fn::distance_kind_from_string(metric);
    const auto x = load(a, window);
    const auto y = load(b, window);
    const auto d = fn::fn_distance_variant(x, y, kind);
    out << "metric " << fn::to_string(kind) << '\n';
    out << "distance " << num(d.value) << '\n';
    out << "exactness " << (d.exact ? "exact" : "window-truncated") << '\n';
    out << "attained_at " << (d.attained_at ? std::to_string(*d.attained_at) : std::string("-")) << '\n';
    return kOk;
}

int cmd_embed(const std::string& path, std::size_t window, const std::string& csv, std::ostream& out) {
    const auto x = load(path, window);
    std::string text = "index,log_length,length_twist\n";
    const auto pairs = fn::to_linf(x);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        text += std::to_string(i + 1) + ',' + csv_num(pairs[i].log_length) + ',' +
                (pairs[i].length_twist ? csv_num(*pairs[i].length_twist) : std::string()) + '\n';
    }
    if (csv.empty()) {
        out << text;
    } else {
        fn::write_text_file(csv, text);
        out << "wrote " << csv << '\n';
    }
    return kOk;
}

void print_bound(std::ostream& out, const std::string& label, const BoundReport& r) {
    out << label << ' ' << num(r.upper.value_or(std::numeric_limits<double>::quiet_NaN())) << "  # " << r.provenance << '\n';
}

int cmd_bounds(double d, double N, double C, std::optional<double> logk, std::ostream& out) {
    const auto a = bounds::BoundAssumptions::make(N, C);
    const auto combined = bounds::combined_qc_upper(d, a);
    const auto twist_only = bounds::twist_change_bound(d, a);
    const auto sandwich = bounds::bilipschitz_sandwich(d, a);
    out << "assumptions " << named(a.as_named()) << '\n';
    out << "d_FN " << num(d) << '\n';
    print_bound(out, "combined_qc_upper", combined);
    print_bound(out, "twist_change_bound", twist_only);
    out << "bishop_term " << num(3.0 * C * d) << "  # 3 C d, the length-change part of the combined bound\n";
    out << "inverse_constant " << num(sandwich.inverse_constant) << "  # d_FN <= (2 + 3C) log K\n";
    out << "forward_lipschitz " << num(sandwich.forward_lipschitz) << '\n';
    out << "sandwich_consistent " << (sandwich.consistent ? "yes" : "no") << '\n';
    if (logk) print_bound(out, "fn_from_qc_upper", bounds::fn_from_qc_upper(*logk, a));
    for (const auto& n : combined.notes) out << "note: " << n << '\n';
    return sandwich.consistent ? kOk : kVerificationFailure;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& csv, std::ostream& out) {
    std::vector<std::string> names;
    if (suite == "all") {
        if (!opt.grid_overrides.empty()) throw UsageError("--grid applies to a single suite, not 'all'");
        names = suite_names();
    } else {
        names.push_back(suite);
    }
    std::string csv_text = csv_header();
    std::size_t failed = 0;
    double wall = 0.0;
    for (const auto& n : names) {
        const auto r = run_suite(n, opt);
        out << render_suite(r);
        if (names.size() > 1) out << '\n';
        if (!r.passed()) ++failed;
        wall += r.wall_seconds;
        if (!csv.empty()) csv_text += csv_rows(r);
    }
    if (names.size() > 1) {
        out << "summary suites " << names.size() << " failed " << failed << '\n';
        out << "# wall_seconds " << seconds(wall) << '\n';
    }
    if (!csv.empty()) fn::write_text_file(csv, csv_text);
    return failed ? kVerificationFailure : kOk;
}

int cmd_example(const std::string& kind_name, long n, std::size_t window, const std::string& prefix, std::ostream& out) {
    const auto kind = examples::example_kind_from_string(kind_name);
    auto emit = [&](const std::string& path, const std::string& text) {
        fn::write_text_file(path, text);
        out << "wrote " << path << '\n';
    };
    if (kind == examples::ExampleKind::Pants1) {
        const auto chain = examples::pants1_graph(n);
        const bool ok = fn::validate_pants_graph(chain.original).passed() && fn::validate_pants_graph(chain.recut).passed();
        emit(prefix + "_original.pantsgraph", fn::format_pants_graph(chain.original));
        emit(prefix + "_recut.pantsgraph", fn::format_pants_graph(chain.recut));
        emit(prefix + "_original.fnstruct", fn::format_structure(chain.original_lengths));
        emit(prefix + "_recut.fnstruct", fn::format_structure(chain.recut_lengths));
        out << "graphs_valid " << (ok ? "yes" : "no") << '\n';
        out << "recut_cap " << num(examples::pants1_recut_cap()) << '\n';
        return ok ? kOk : kVerificationFailure;
    }
    const auto [x, y] = examples::make_fn_pair(kind, n, window ? window : static_cast<std::size_t>(n));
    emit(prefix + "_x.fnstruct", fn::format_structure(x));
    emit(prefix + "_y.fnstruct", fn::format_structure(y));
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fenchel-Nielsen and quasiconformal distance toolkit"};
    app.name("hypfn");
    app.require_subcommand(1);

    std::string eval_name;
    std::vector<std::string> eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate a named function");
    eval->add_option("function", eval_name, "function name")->required();
    eval->add_option("args", eval_args, "numeric arguments");
    eval->allow_extras(false);
    eval->positionals_at_end(true);

    std::string file_a, file_b, metric = "fn", csv;
    std::size_t window = 0;
    auto* dist = app.add_subcommand("dist", "distance between two structure files");
    dist->add_option("a", file_a)->required();
    dist->add_option("b", file_b)->required();
    dist->add_option("--metric", metric, "fn, raw-twist or raw-length")->check(CLI::IsMember({"fn", "raw-twist", "raw-length"}));
    dist->add_option("--window", window, "number of curves (0: whole table, or a generator up to its constant tail)");

    auto* embed = app.add_subcommand("embed", "print (log length, length * twist) pairs as CSV");
    embed->add_option("file", file_a)->required();
    embed->add_option("--window", window);
    embed->add_option("--csv", csv, "write CSV here instead of stdout");

    double d_fn = 0.0, cap = 0.0, bishop_c = 0.0;
    std::optional<double> logk;
    auto* bnd = app.add_subcommand("bounds", "d_FN / log K comparison bounds");
    bnd->add_option("d", d_fn, "Fenchel-Nielsen distance")->required();
    bnd->add_option("--cap", cap, "length cap N")->required();
    bnd->add_option("--bishop-c", bishop_c, "constant C(N) of the pants length bound")->required();
    bnd->add_option("--logk", logk, "log K of a known map, for the inverse direction");

    std::string suite;
    std::vector<std::string> grid;
    std::optional<double> suite_c;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name or 'all'")->required();
    ver->add_option("--grid", grid, "lo:hi:steps[:lin|log], repeat once per axis")->take_all();
    ver->add_option("--csv", csv, "write every check as a CSV row");
    ver->add_option("--bishop-c", suite_c, "pin C in the sandwich suite");

    std::string kind, prefix;
    long n = 1;
    auto* ex = app.add_subcommand("example", "write example structures");
    ex->add_option("kind", kind, "fn1, fn2 or pants1")->required();
    ex->add_option("--n", n, "example parameter (n_max for pants1)")->required();
    ex->add_option("--window", window, "window for fn1/fn2 (default n)");
    ex->add_option("--out", prefix, "output path prefix")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_name, eval_args, out);
        if (dist->parsed()) return cmd_dist(file_a, file_b, metric, window, out);
        if (embed->parsed()) return cmd_embed(file_a, window, csv, out);
        if (bnd->parsed()) return cmd_bounds(d_fn, cap, bishop_c, logk, out);
        if (ver->parsed()) {
            SuiteOptions opt;
            opt.grid_overrides = grid;
            opt.bishop_c = suite_c;
            opt.keep_rows = !csv.empty();
            return cmd_verify(suite, opt, csv, out);
        }
        if (ex->parsed()) return cmd_example(kind, n, window, prefix, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const AssumptionError& e) {
        err << "assumption violated: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hypfn::cli
