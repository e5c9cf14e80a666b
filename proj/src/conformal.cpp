#include "hypfn/conformal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hypfn/errors.hpp"
#include "hypfn/hyp_core.hpp"

namespace hypfn::conformal {

namespace {

using std::numbers::pi;

void require_open_unit(double r, const char* what) {
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError(std::string(what) + " requires 0 < r < 1 (got " + std::to_string(r) + ")");
    }
}

void require_nonnegative_t(double t) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError("t must be finite and >= 0 (got " + std::to_string(t) + ")");
}

// r and r' = sqrt(1 - r^2) are passed separately so that neither is formed by cancellation.
double mu_of_pair(double r, double r_comp) { return 0.5 * pi * agm(1.0, r_comp) / agm(1.0, r); }

double mu_prime_of_pair(double r, double r_comp) {
    const double k = 0.5 * pi / agm(1.0, r_comp);
    return -(pi * pi) / (4.0 * r * r_comp * r_comp * k * k);
}

// For t >= 0, the Groetzsch argument r = 1/sqrt(1 + e^t) and its complement.
struct HArgument {
    double r, r_comp, e_neg;
};
HArgument h_argument(double t) {
    const double e = std::exp(-t);
    return {std::sqrt(e / (1.0 + e)), 1.0 / std::sqrt(1.0 + e), e};
}

double key(const ExtendedReal& p) {
    return p.is_infinite() ? std::numeric_limits<double>::infinity() : p.value();
}

// Factor (a - b) of a cross-ratio; factors involving the point at infinity cancel pairwise
// in normalized_vertex and are replaced by 1.
double factor(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.is_infinite() || b.is_infinite()) return 1.0;
    return a.value() - b.value();
}

}  // namespace

ExtendedReal::ExtendedReal(double v) : value_(v) {
    if (!std::isfinite(v)) throw DomainError("finite boundary point expected; use ExtendedReal::infinity()");
}

ExtendedReal ExtendedReal::infinity() {
    ExtendedReal p;
    p.infinite_ = true;
    return p;
}

double ExtendedReal::value() const {
    if (infinite_) throw UsageError("point at infinity has no real value");
    return value_;
}

std::string ExtendedReal::to_string() const {
    if (infinite_) return "inf";
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

IdealQuadrilateral IdealQuadrilateral::make(ExtendedReal p1, ExtendedReal p2, ExtendedReal p3, ExtendedReal p4) {
    IdealQuadrilateral q{{p1, p2, p3, p4}};
    int descents = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (q.p[i] == q.p[j]) throw DomainError("quadrilateral vertices must be distinct");
        }
        if (key(q.p[(i + 1) % 4]) < key(q.p[i])) ++descents;
    }
    if (descents != 1) throw DomainError("quadrilateral vertices must be in positive cyclic order");
    return q;
}

double agm(double a, double b) {
    if (!(a >= 0.0 && b >= 0.0)) throw DomainError("agm requires non-negative arguments");
    for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
        const double m = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = m;
    }
    return 0.5 * (a + b);
}

double elliptic_k(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("K(r) requires 0 <= r < 1 (got " + std::to_string(r) + ")");
    return 0.5 * pi / agm(1.0, std::sqrt((1.0 - r) * (1.0 + r)));
}

double grotzsch_mu(double r) {
    require_open_unit(r, "mu(r)");
    return mu_of_pair(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

double grotzsch_mu_prime(double r) {
    require_open_unit(r, "mu'(r)");
    return mu_prime_of_pair(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

double grotzsch_mu_lower_bound(double r) {
    require_open_unit(r, "mu lower bound");
    const double rc = std::sqrt((1.0 - r) * (1.0 + r));
    return (2.0 / pi) * std::log((1.0 + rc) * (1.0 + rc) / r);
}

double h_of_t(double t) {
    require_nonnegative_t(t);
    const auto arg = h_argument(t);
    return (2.0 / pi) * mu_of_pair(arg.r, arg.r_comp);
}

double h_derivative(double t) {
    require_nonnegative_t(t);
    const auto arg = h_argument(t);
    if (arg.e_neg < 1e-280) return 1.0 / pi;  // mu' overflows; h' -> 1/pi as t -> inf
    // dr/dt = -1/2 e^t (1 + e^t)^{-3/2} = -1/2 sqrt(e^-t) / (1 + e^-t)^{3/2}
    const double inner = std::sqrt(arg.e_neg) / std::pow(1.0 + arg.e_neg, 1.5);
    return -(1.0 / pi) * mu_prime_of_pair(arg.r, arg.r_comp) * inner;
}

double h_derivative_without_inner_factor(double t) { return h_derivative(t) * std::exp(-t); }

double normalized_vertex(const IdealQuadrilateral& q) {
    const auto& [p1, p2, p3, p4] = q.p;
    const double x = -(factor(p4, p3) * factor(p2, p1)) / (factor(p4, p1) * factor(p2, p3));
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("degenerate quadrilateral");
    return x;
}

double quad_modulus_normalized(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("normalized vertex must be finite and > 0");
    const double r = 1.0 / std::sqrt(1.0 + x);
    const double r_comp = std::sqrt(x / (1.0 + x));
    return (2.0 / pi) * mu_of_pair(r, r_comp);
}

double quad_modulus(const IdealQuadrilateral& q) { return quad_modulus_normalized(normalized_vertex(q)); }

double extremal_length(const IdealQuadrilateral& q) { return 1.0 / quad_modulus(q); }

double cylinder_interval(double b) { return 2.0 * hyp::theta_of_d(b); }

AffineDilatation affine_dilatation(double A) {
    if (!std::isfinite(A)) throw DomainError("shear A must be finite");
    const double a = std::abs(A);
    const double root = std::sqrt(4.0 + A * A);
    return {1.0 + 0.5 * A * A + 0.5 * a * root, a / root};
}

}  // namespace hypfn::conformal
