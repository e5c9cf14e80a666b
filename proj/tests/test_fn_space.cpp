#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypfn/errors.hpp"
#include "hypfn/fn_space.hpp"
#include "hypfn/rng.hpp"

using namespace hypfn;
using namespace hypfn::fn;
using doctest::Approx;
using std::numbers::pi;

namespace {

StructureWindow random_window(Rng& rng, const std::vector<bool>& boundary) {
    std::vector<FNCoordinate> e;
    for (bool b : boundary) {
        const double l = rng.log_uniform(1e-3, 1e3);
        e.push_back(b ? FNCoordinate::boundary(l) : FNCoordinate::interior(l, rng.uniform(-20, 20)));
    }
    return StructureWindow::from_table(std::move(e));
}

std::vector<bool> random_pattern(Rng& rng, std::size_t n) {
    std::vector<bool> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = rng.coin(0.2);
    return p;
}

}  // namespace

TEST_CASE("coordinates and generators") {
    CHECK(FNCoordinate::boundary(2.0).is_boundary());
    CHECK_FALSE(FNCoordinate::interior(2.0, 0.0).is_boundary());
    CHECK_THROWS_AS(FNCoordinate::interior(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(FNCoordinate::interior(1.0, INFINITY), DomainError);

    const auto g = StructureGenerator::make(GeneratorKind::ExFn1Y, 4);
    CHECK(g.at(4).length == 0.25);
    CHECK(*g.at(4).twist == Approx(2.0 * pi).epsilon(1e-16));
    CHECK(g.at(3).length == 1.0);
    CHECK(*g.at(1000).twist == 0.0);
    CHECK(g.tail_start() == 5);
    CHECK(StructureGenerator::make(GeneratorKind::ExFn2Y, 10).at(10).length == Approx(0.01).epsilon(1e-16));
    CHECK(StructureGenerator::make(GeneratorKind::Constant, 3).tail_start() == 1);
    CHECK_THROWS_AS(StructureGenerator::make(GeneratorKind::Table, 1), UsageError);
    CHECK_THROWS_AS(StructureGenerator::make(GeneratorKind::ExFn1X, 0), DomainError);
    CHECK_THROWS_AS(g.at(0), UsageError);
    CHECK(generator_kind_from_string("ex_fn2_x") == GeneratorKind::ExFn2X);
    CHECK_THROWS_AS(generator_kind_from_string("bogus"), UsageError);
}

TEST_CASE("window exactness") {
    const auto g = StructureGenerator::make(GeneratorKind::ExFn1X, 5);
    CHECK(StructureWindow::from_generator(g, 5).covers_tail());
    CHECK(StructureWindow::from_generator(g, 9).covers_tail());
    CHECK_FALSE(StructureWindow::from_generator(g, 4).covers_tail());
    CHECK(StructureWindow::from_table({FNCoordinate::interior(1, 0)}).covers_tail());
    CHECK_THROWS_AS(StructureWindow::from_generator(g, 0), UsageError);
    const auto x = StructureWindow::from_generator(StructureGenerator::make(GeneratorKind::ExFn1X, 5), 4);
    const auto y = StructureWindow::from_generator(StructureGenerator::make(GeneratorKind::ExFn1Y, 5), 4);
    const auto d = fn_distance(x, y);
    CHECK(d.value == 0.0);
    CHECK_FALSE(d.exact);
    CHECK_FALSE(d.attained_at.has_value());
}

TEST_CASE("closed-form distances of the example pairs") {
    for (long n = 1; n <= 100; ++n) {
        const auto w = static_cast<std::size_t>(n + 3);
        const auto x1 = StructureWindow::from_generator(StructureGenerator::make(GeneratorKind::ExFn1X, n), w);
        const auto y1 = StructureWindow::from_generator(StructureGenerator::make(GeneratorKind::ExFn1Y, n), w);
        const auto d1 = fn_distance(x1, y1);
        CHECK(d1.value == Approx(2.0 * pi / n).epsilon(1e-15));
        CHECK(d1.exact);
        CHECK(*d1.attained_at == static_cast<std::size_t>(n));
        CHECK(fn_distance_variant(x1, y1, DistanceKind::RawTwist).value == Approx(2.0 * pi).epsilon(1e-15));
        CHECK(fn_distance_variant(x1, y1, DistanceKind::RawLength).value == Approx(2.0 * pi / n).epsilon(1e-15));

        const auto x2 = StructureWindow::from_generator(StructureGenerator::make(GeneratorKind::ExFn2X, n), w);
        const auto y2 = StructureWindow::from_generator(StructureGenerator::make(GeneratorKind::ExFn2Y, n), w);
        const double nn = static_cast<double>(n);
        CHECK(fn_distance(x2, y2).value == Approx(std::log(nn)).epsilon(1e-15));
        CHECK(fn_distance_variant(x2, y2, DistanceKind::RawLength).value == Approx(1.0 / nn - 1.0 / (nn * nn)).epsilon(1e-15));
        CHECK(fn_distance_variant(x2, y2, DistanceKind::RawTwist).value == Approx(std::log(nn)).epsilon(1e-15));
    }
}

TEST_CASE("pseudometric axioms and sup-norm isometry on random windows") {
    Rng rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto pattern = random_pattern(rng, 1 + rng.index(200));
        const auto x = random_window(rng, pattern);
        const auto y = random_window(rng, pattern);
        const auto z = random_window(rng, pattern);
        const double dxy = fn_distance(x, y).value;
        CHECK(fn_distance(x, x).value == 0.0);
        CHECK(dxy == fn_distance(y, x).value);
        CHECK(dxy + fn_distance(y, z).value >= fn_distance(x, z).value - 1e-12);
        CHECK(dxy == sup_norm_distance(to_linf(x), to_linf(y)));
        for (auto kind : {DistanceKind::RawTwist, DistanceKind::RawLength}) {
            CHECK(fn_distance_variant(x, y, kind).value == fn_distance_variant(y, x, kind).value);
            CHECK(fn_distance_variant(x, y, kind).value + fn_distance_variant(y, z, kind).value >=
                  fn_distance_variant(x, z, kind).value - 1e-12);
        }
    }
}

TEST_CASE("boundary curves contribute their length term only") {
    const auto x = StructureWindow::from_table({FNCoordinate::boundary(1.0), FNCoordinate::interior(1.0, 0.0)});
    const auto y = StructureWindow::from_table({FNCoordinate::boundary(std::exp(0.5)), FNCoordinate::interior(1.0, 0.1)});
    const auto d = fn_distance(x, y);
    CHECK(d.value == Approx(0.5).epsilon(1e-15));
    CHECK(*d.attained_at == 1);
    const auto e = to_linf(x);
    CHECK_FALSE(e[0].length_twist.has_value());
    CHECK(*e[1].length_twist == 0.0);
}

TEST_CASE("embedding values") {
    const auto w = StructureWindow::from_generator(StructureGenerator::make(GeneratorKind::ExFn1Y, 7), 9);
    const auto e = to_linf(w);
    CHECK(e[6].log_length == Approx(std::log(1.0 / 7.0)).epsilon(1e-15));
    CHECK(*e[6].length_twist == Approx(2.0 * pi / 7.0).epsilon(1e-15));
    for (std::size_t i : {0u, 5u, 8u}) {
        CHECK(e[i].log_length == 0.0);
        CHECK(*e[i].length_twist == 0.0);
    }
}

TEST_CASE("mismatched windows are rejected") {
    const auto a = StructureWindow::from_table({FNCoordinate::interior(1, 0), FNCoordinate::interior(1, 0)});
    const auto b = StructureWindow::from_table({FNCoordinate::interior(1, 0)});
    const auto c = StructureWindow::from_table({FNCoordinate::interior(1, 0), FNCoordinate::boundary(1)});
    CHECK_THROWS_AS(fn_distance(a, b), UsageError);
    CHECK_THROWS_AS(fn_distance(a, c), UsageError);
    CHECK_THROWS_AS(sup_norm_distance(to_linf(a), to_linf(c)), UsageError);
    CHECK_THROWS_AS(a.at(3), UsageError);
    CHECK(distance_kind_from_string("raw-twist") == DistanceKind::RawTwist);
    CHECK_THROWS_AS(distance_kind_from_string("euclid"), UsageError);
}

TEST_CASE("upper-bound predicate") {
    const auto g = StructureGenerator::make(GeneratorKind::ExFn1X, 6);
    auto r = is_upper_bounded(g, 1.0);
    CHECK(r.bounded);
    CHECK(r.closed_form);
    CHECK(r.complete);
    CHECK(r.sup_length == 1.0);
    CHECK_FALSE(is_upper_bounded(g, 0.5).bounded);
    CHECK(*is_upper_bounded(g, 0.5).witness == 1);
    CHECK(is_upper_bounded(StructureGenerator::make(GeneratorKind::Constant, 1), 3.0).bounded);

    const auto t = StructureWindow::from_table(
        {FNCoordinate::interior(1, 0), FNCoordinate::interior(4, 0), FNCoordinate::boundary(9), FNCoordinate::interior(2, 1)});
    r = is_upper_bounded(t, 3.0);
    CHECK_FALSE(r.bounded);
    CHECK(*r.witness == 2);
    CHECK(r.sup_length == 9.0);
    CHECK_FALSE(r.complete);
    CHECK(is_upper_bounded(t, 9.0).bounded);
    CHECK_THROWS_AS(is_upper_bounded(t, 0.0), DomainError);
}

TEST_CASE("two-sided length distortion test") {
    CHECK(wolpert_check(1.0, 1.0, 1.0).pass);
    CHECK_FALSE(wolpert_check(1.0, 1.0 + 1e-12, 1.0).pass);
    const auto w = wolpert_check(1.0, 2.0, 2.0);
    CHECK(w.pass);
    CHECK(w.slack == Approx(0.0).epsilon(1e-15));
    CHECK_FALSE(wolpert_check(1.0, 3.0, 2.0).pass);
    CHECK_FALSE(wolpert_check(3.0, 1.0, 2.0).pass);
    CHECK_THROWS_AS(wolpert_check(1.0, 1.0, 0.99), DomainError);
    Rng rng(42);
    for (int k = 0; k < 5000; ++k) {
        const double lx = rng.log_uniform(0.01, 100), ly = rng.log_uniform(0.01, 100), K = rng.log_uniform(1, 100);
        const auto r = wolpert_check(lx, ly, K);
        CHECK(r.pass == (std::abs(std::log(lx / ly)) <= std::log(K)));
    }
}

TEST_CASE("pants graph validation") {
    PantsGraph genus2;
    genus2.curves = {{1, {false}}, {2, {false}}, {3, {false}}};
    genus2.pants = {{1, {Slot::of(1), Slot::of(2), Slot::of(3)}}, {2, {Slot::of(1), Slot::of(2), Slot::of(3)}}};
    CHECK(validate_pants_graph(genus2).passed());

    auto triple = genus2;
    triple.pants.push_back({3, {Slot::of(1), Slot::cusp(), Slot::cusp()}});
    const auto rep = validate_pants_graph(triple);
    CHECK_FALSE(rep.passed());
    bool named = false;
    for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::Fail) named = named || c.note.find("curve 1 has 3") != std::string::npos;
    }
    CHECK(named);

    auto bad_boundary = genus2;
    bad_boundary.curves[1].boundary = true;
    CHECK_FALSE(validate_pants_graph(bad_boundary).passed());

    auto dangling = genus2;
    dangling.pants[0].slots[0] = Slot::of(9);
    CHECK_FALSE(validate_pants_graph(dangling).passed());

    auto dup = genus2;
    dup.pants[1].id = 1;
    CHECK_FALSE(validate_pants_graph(dup).passed());

    auto unused = genus2;
    unused.curves[4] = {false};
    CHECK_FALSE(validate_pants_graph(unused).passed());
}
