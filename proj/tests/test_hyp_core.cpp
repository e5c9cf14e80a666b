#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypfn/errors.hpp"
#include "hypfn/hyp_core.hpp"
#include "hypfn/rng.hpp"
#include "oracle.hpp"

using namespace hypfn;
using namespace hypfn::hyp;
using doctest::Approx;

TEST_CASE("arcosh near 1 and for large arguments") {
    CHECK(arcosh(1.0) == 0.0);
    CHECK(arcosh(std::cosh(1e-6)) == Approx(1e-6).epsilon(1e-9));
    CHECK(arcosh1p(1e-20) == Approx(std::sqrt(2e-20)).epsilon(1e-12));
    CHECK(arcosh(1e12) == Approx(std::log(2e12)).epsilon(1e-15));
    for (double x : {1.5, 3.0, 10.0, 1e5}) CHECK(arcosh(x) == Approx(std::acosh(x)).epsilon(1e-15));
    CHECK_THROWS_AS(arcosh(0.5), DomainError);
}

TEST_CASE("collar quantities, frozen high-precision values") {
    CHECK(collar_margin(2.0) == Approx(0.13617073445591578).epsilon(1e-14));
    CHECK(collar_halfwidth(2.0) == Approx(0.7719368329053047).epsilon(1e-14));
    CHECK(theta_of_d(std::log(3.0)) == Approx(0.9272952180016122).epsilon(1e-14));
    // theta(log 3) = 2 arctan(1/2)
    CHECK(theta_of_d(std::log(3.0)) == Approx(2.0 * std::atan(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(collar_margin(0.0), DomainError);
    CHECK_THROWS_AS(collar_halfwidth(-1.0), DomainError);
    CHECK_THROWS_AS(theta_of_d(0.0), DomainError);
}

TEST_CASE("collar identities on a log grid") {
    double prev_b = INFINITY;
    for (int k = 0; k <= 200; ++k) {
        const double l = 0.01 * std::pow(3000.0, k / 200.0);
        const auto c = collar_data(l);
        CHECK(std::sinh(c.halfwidth) * std::sinh(0.5 * l) == Approx(1.0).epsilon(1e-12));
        CHECK(c.angle > 0.0);
        CHECK(c.angle < 0.5 * std::numbers::pi);
        CHECK(c.margin > 0.0);
        CHECK(c.margin < prev_b);
        CHECK(c.margin <= c.halfwidth);
        prev_b = c.margin;
    }
}

TEST_CASE("distance: three formulas agree on random pairs") {
    Rng rng(11);
    for (int k = 0; k < 2000; ++k) {
        const auto z = UpperHalfPlanePoint::make(rng.uniform(-5, 5), rng.log_uniform(1e-2, 1e2));
        const auto w = UpperHalfPlanePoint::make(rng.uniform(-5, 5), rng.log_uniform(1e-2, 1e2));
        const double ref = oracle::hyp_distance(z.x, z.y, w.x, w.y);
        CHECK(hyp_distance(z, w) == Approx(ref).epsilon(1e-12));
        CHECK(hyp_distance_cross_ratio(z, w) == Approx(ref).epsilon(1e-10));
        CHECK(hyp_distance(z, w) == hyp_distance(w, z));
    }
}

TEST_CASE("distance: vertical geodesics and special pairs") {
    const UpperHalfPlanePoint i{0.0, 1.0};
    CHECK(hyp_distance(i, {0.0, std::exp(2.0)}) == Approx(2.0).epsilon(1e-15));
    CHECK(hyp_distance_cross_ratio(i, {0.0, std::exp(2.0)}) == Approx(2.0).epsilon(1e-15));
    CHECK(hyp_distance_cross_ratio({3.0, 0.5}, {3.0, 4.0}) == Approx(std::log(8.0)).epsilon(1e-15));
    CHECK(hyp_distance(i, i) == 0.0);
    // isometry z -> -1/z
    const UpperHalfPlanePoint z{0.3, 0.7}, w{-1.2, 2.5};
    auto inv = [](UpperHalfPlanePoint p) {
        const double n = p.x * p.x + p.y * p.y;
        return UpperHalfPlanePoint{-p.x / n, p.y / n};
    };
    CHECK(hyp_distance(inv(z), inv(w)) == Approx(hyp_distance(z, w)).epsilon(1e-14));
    CHECK(hyp_distance_cross_ratio(inv(z), inv(w)) == Approx(hyp_distance(z, w)).epsilon(1e-12));
    CHECK_THROWS_AS(UpperHalfPlanePoint::make(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(UpperHalfPlanePoint::make(NAN, 1.0), DomainError);
}

TEST_CASE("hexagon sides, frozen equilateral case") {
    const auto b = hexagon_sides(HexagonAlternatingSides::make(1, 1, 1));
    for (double bi : b) CHECK(bi == Approx(1.7049128323580137).epsilon(1e-14));
    const auto h = HexagonAlternatingSides::make(1, 1, 1);
    CHECK(hexagon_altitude_cosh_sq(h, 1) == Approx(9.768855646461657).epsilon(1e-14));
    CHECK(hexagon_altitude(h, 2) == Approx(1.8061129998411260).epsilon(1e-14));
}

TEST_CASE("hexagon sides against the direct formula and the pentagon relation") {
    Rng rng(12);
    for (int k = 0; k < 1000; ++k) {
        const double a1 = rng.log_uniform(0.05, 6), a2 = rng.log_uniform(0.05, 6), a3 = rng.log_uniform(0.05, 6);
        const auto h = HexagonAlternatingSides::make(a1, a2, a3);
        const auto b = hexagon_sides(h);
        const long double c1 = (std::cosh((long double)a1) + std::cosh((long double)a2) * std::cosh((long double)a3)) /
                               (std::sinh((long double)a2) * std::sinh((long double)a3));
        CHECK(b[0] == Approx(static_cast<double>(std::acosh(c1))).epsilon(1e-10));
        // the altitude between a1 and b1 splits the hexagon into two right-angled pentagons
        const double ch = std::cosh(hexagon_altitude(h, 1));
        CHECK(ch == Approx(std::sinh(a2) * std::sinh(b[2])).epsilon(1e-9));
        CHECK(ch == Approx(std::sinh(a3) * std::sinh(b[1])).epsilon(1e-9));
        // sine rule
        CHECK(std::sinh(a1) / std::sinh(b[0]) == Approx(std::sinh(a2) / std::sinh(b[1])).epsilon(1e-9));
    }
}

TEST_CASE("hexagon side permutation covariance and duality") {
    const auto b = hexagon_sides(HexagonAlternatingSides::make(0.4, 1.1, 2.7));
    const auto p = hexagon_sides(HexagonAlternatingSides::make(2.7, 0.4, 1.1));
    CHECK(p[0] == Approx(b[2]).epsilon(1e-15));
    CHECK(p[1] == Approx(b[0]).epsilon(1e-15));
    const auto back = hexagon_sides(HexagonAlternatingSides::make(b[0], b[1], b[2]));
    CHECK(back[0] == Approx(0.4).epsilon(1e-12));
    CHECK(back[1] == Approx(1.1).epsilon(1e-12));
    CHECK(back[2] == Approx(2.7).epsilon(1e-12));
    CHECK_THROWS_AS(HexagonAlternatingSides::make(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hexagon_altitude(HexagonAlternatingSides::make(1, 1, 1), 4), UsageError);
}

TEST_CASE("cusped hexagon: zero sides use cosh 0 = 1") {
    const std::array<double, 3> a{0.0, 1.0, 1.0};
    // b1 is opposite the cusp; b2, b3 touch it and are infinite
    CHECK(std::isinf(cusped_hexagon_side(a, 2)));
    CHECK(std::isinf(cusped_hexagon_side(a, 3)));
    const double expect = std::acosh((1.0 + std::cosh(1.0) * std::cosh(1.0)) / (std::sinh(1.0) * std::sinh(1.0)));
    CHECK(cusped_hexagon_side(a, 1) == Approx(expect).epsilon(1e-14));
    // positive sides agree with the plain formula
    const std::array<double, 3> p{0.5, 1.0, 1.5};
    const auto b = hexagon_sides(HexagonAlternatingSides::make(0.5, 1.0, 1.5));
    for (int i = 1; i <= 3; ++i) CHECK(cusped_hexagon_side(p, i) == Approx(b[i - 1]).epsilon(1e-14));
    CHECK_THROWS_AS(cusped_altitude_cosh_sq(a, 1), DomainError);
}

TEST_CASE("pants collar check passes on random pants") {
    Rng rng(13);
    for (int k = 0; k < 2000; ++k) {
        const auto l = PantsBoundaryLengths::make(rng.log_uniform(1e-3, 30), rng.log_uniform(1e-3, 30), rng.log_uniform(1e-3, 30));
        const auto rep = verify_pants_collar(l);
        REQUIRE(rep.passed());
        CHECK(rep.count(CheckStatus::Pass) == 9);
        CHECK(rep.count(CheckStatus::Fail, true) == 0);
    }
}

TEST_CASE("pants collar check with cusps") {
    const auto one = verify_pants_collar(PantsBoundaryLengths::make(0.0, 1.0, 2.0));
    CHECK(one.passed());
    CHECK(one.count(CheckStatus::Skip) == 3);
    CHECK(one.count(CheckStatus::Pass) == 6);
    const auto two = verify_pants_collar(PantsBoundaryLengths::make(0.0, 0.0, 1.0));
    CHECK(two.passed());
    CHECK(two.count(CheckStatus::Skip) == 6);
    CHECK_THROWS_AS(PantsBoundaryLengths::make(-1.0, 1.0, 1.0), DomainError);
}
