#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypfn/conformal.hpp"
#include "hypfn/errors.hpp"
#include "hypfn/rng.hpp"
#include "oracle.hpp"

using namespace hypfn;
using namespace hypfn::conformal;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("elliptic K against boost ellint_1") {
    CHECK(elliptic_k(0.0) == Approx(0.5 * pi).epsilon(1e-15));
    CHECK(elliptic_k(std::sqrt(0.5)) == Approx(1.8540746773013719).epsilon(1e-14));
    for (int k = 1; k < 200; ++k) {
        const double r = k / 200.0;
        CHECK(elliptic_k(r) == Approx(oracle::ellint_k(r)).epsilon(1e-13));
    }
    CHECK(elliptic_k(1.0 - 1e-12) == Approx(oracle::ellint_k(1.0 - 1e-12)).epsilon(1e-9));
    CHECK_THROWS_AS(elliptic_k(1.0), DomainError);
    CHECK_THROWS_AS(elliptic_k(-0.1), DomainError);
}

TEST_CASE("Groetzsch modulus") {
    CHECK(grotzsch_mu(0.5) == Approx(2.009459377005285).epsilon(1e-14));
    CHECK(grotzsch_mu_lower_bound(0.5) == Approx(1.2355316728106277).epsilon(1e-14));
    CHECK(grotzsch_mu(std::sqrt(0.5)) == Approx(0.5 * pi).epsilon(1e-14));
    for (int k = 1; k < 100; ++k) {
        const double r = k / 100.0;
        const double rc = std::sqrt(1.0 - r * r);
        CHECK(grotzsch_mu(r) == Approx(oracle::grotzsch_mu(r)).epsilon(1e-12));
        CHECK(grotzsch_mu(r) * grotzsch_mu(rc) == Approx(pi * pi / 4.0).epsilon(1e-12));
        CHECK(grotzsch_mu(r) > grotzsch_mu_lower_bound(r));
        if (k >= 5 && k <= 95) {
            const double fd = oracle::central_diff([](double x) { return grotzsch_mu(x); }, r, 1e-5);
            CHECK(oracle::rel_err(grotzsch_mu_prime(r), fd) < 1e-7);
        }
        CHECK(grotzsch_mu_prime(r) < 0.0);
    }
    CHECK_THROWS_AS(grotzsch_mu(0.0), DomainError);
    CHECK_THROWS_AS(grotzsch_mu(1.0), DomainError);
}

TEST_CASE("h(t), frozen high-precision values") {
    CHECK(h_of_t(0.0) == Approx(1.0).epsilon(1e-15));
    CHECK(h_of_t(0.5) == Approx(1.1204961120330479).epsilon(1e-14));
    CHECK(h_of_t(1.0) == Approx(1.2521724373905647).epsilon(1e-14));
    CHECK(h_of_t(2.0) == Approx(1.5396037450262282).epsilon(1e-14));
    CHECK(h_of_t(3.0) == Approx(1.8452401995671918).epsilon(1e-14));
    CHECK(h_of_t(5.0) == Approx(2.4751612853018289).epsilon(1e-14));
    CHECK(h_of_t(10.0) == Approx(4.0656484879384870).epsilon(1e-14));
    CHECK(h_of_t(20.0) == Approx(7.2487401246144626).epsilon(1e-14));
    CHECK(h_derivative(1.0) == Approx(0.27299657395844914).epsilon(1e-13));
    CHECK(h_derivative(3.0) == Approx(0.31069306296932172).epsilon(1e-13));
}

TEST_CASE("h(t) against the Schwarz-Christoffel quadrature") {
    for (double t : {0.0, 0.25, 1.0, 2.5, 4.0, 7.0}) {
        CHECK(h_of_t(t) == Approx(oracle::quad_modulus_sc(std::exp(t))).epsilon(1e-10));
    }
}

TEST_CASE("h' matches finite differences and increases to 1/pi") {
    double prev = 0.0;
    for (int k = 0; k <= 400; ++k) {
        const double t = 0.05 * k;
        const double d = h_derivative(t);
        if (t >= 0.01) {
            const double fd = oracle::central_diff([](double s) { return h_of_t(s); }, t, 1e-5);
            CHECK(oracle::rel_err(d, fd) < 1e-7);
        }
        CHECK(d > prev);
        CHECK(d < 1.0 / pi);
        prev = d;
    }
    // at t = 0 the derivative reduces to pi / (4 K(1/sqrt 2)^2)
    CHECK(h_derivative(0.0) == Approx(pi / (4.0 * std::pow(oracle::ellint_k(std::sqrt(0.5)), 2))).epsilon(1e-13));
    CHECK(h_derivative(800.0) == Approx(1.0 / pi).epsilon(1e-15));
    CHECK(h_derivative(60.0) == Approx(1.0 / pi).epsilon(1e-12));
    CHECK(h_derivative_without_inner_factor(2.0) == Approx(h_derivative(2.0) * std::exp(-2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(h_of_t(-0.1), DomainError);
    CHECK_THROWS_AS(h_derivative(INFINITY), DomainError);
}

TEST_CASE("quadrilateral modulus: two independent oracles") {
    Rng rng(21);
    for (int k = 0; k < 60; ++k) {
        const double x = rng.log_uniform(1e-4, 1e4);
        const double m = quad_modulus_normalized(x);
        CHECK(m == Approx(oracle::quad_modulus_sc(x)).epsilon(1e-9));
        CHECK(m == Approx(oracle::quad_modulus_landen(x)).epsilon(1e-10));
        CHECK(m * quad_modulus_normalized(1.0 / x) == Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("quadrilateral modulus: normalization, reciprocity and invariance") {
    const auto inf = ExtendedReal::infinity();
    CHECK(quad_modulus(IdealQuadrilateral::make(inf, -1.0, 0.0, 1.0)) == Approx(1.0).epsilon(1e-15));
    CHECK(quad_modulus(IdealQuadrilateral::make(-1.0, 0.0, 1.0, inf)) == Approx(1.0).epsilon(1e-15));
    const auto q = IdealQuadrilateral::make(-2.0, 0.5, 1.0, 7.0);
    CHECK(quad_modulus(q) * quad_modulus(q.rotated()) == Approx(1.0).epsilon(1e-13));
    CHECK(extremal_length(q) == Approx(1.0 / quad_modulus(q)).epsilon(1e-15));
    // affine maps preserve the modulus
    const auto moved = IdealQuadrilateral::make(3.0 * -2.0 + 1.0, 3.0 * 0.5 + 1.0, 3.0 * 1.0 + 1.0, 3.0 * 7.0 + 1.0);
    CHECK(quad_modulus(moved) == Approx(quad_modulus(q)).epsilon(1e-13));
    // H(inf, -1, 0, e^t) has modulus h(t)
    CHECK(quad_modulus(IdealQuadrilateral::make(inf, -1.0, 0.0, std::exp(2.0))) == Approx(h_of_t(2.0)).epsilon(1e-13));
    // cyclic shifts with infinity inside
    CHECK(quad_modulus(IdealQuadrilateral::make(0.0, 5.0, inf, -3.0)) > 0.0);
}

TEST_CASE("quadrilateral validation") {
    const auto inf = ExtendedReal::infinity();
    CHECK_THROWS_AS(IdealQuadrilateral::make(0.0, 0.0, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(IdealQuadrilateral::make(inf, inf, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(IdealQuadrilateral::make(0.0, 2.0, 1.0, 3.0), DomainError);
    CHECK_THROWS_AS(IdealQuadrilateral::make(3.0, 2.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(ExtendedReal(NAN), DomainError);
    CHECK_THROWS_AS(inf.value(), UsageError);
    CHECK(inf.to_string() == "inf");
    CHECK_THROWS_AS(quad_modulus_normalized(0.0), DomainError);
}

TEST_CASE("cylinder interval and affine shear") {
    CHECK(cylinder_interval(std::log(3.0)) == Approx(1.8545904360032245).epsilon(1e-14));
    const auto a = affine_dilatation(1.5);
    CHECK(a.K == Approx(4.0).epsilon(1e-15));
    CHECK(a.beltrami_modulus == Approx(0.6).epsilon(1e-15));
    CHECK(affine_dilatation(0.0).K == 1.0);
    Rng rng(22);
    for (int k = 0; k < 500; ++k) {
        const double A = rng.uniform(-50, 50);
        const auto d = affine_dilatation(A);
        CHECK(d.K == Approx((1.0 + d.beltrami_modulus) / (1.0 - d.beltrami_modulus)).epsilon(1e-11));
        CHECK(d.K == Approx(affine_dilatation(-A).K).epsilon(1e-15));
    }
    CHECK_THROWS_AS(affine_dilatation(INFINITY), DomainError);
}
