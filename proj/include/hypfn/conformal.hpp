#pragma once

// Complete elliptic integral, Groetzsch ring modulus, the quadrilateral modulus h(t)
// and the affine shear dilatation.

#include <array>
#include <string>

namespace hypfn::conformal {

/// A boundary point of the upper half-plane: a real number or the point at infinity.
class ExtendedReal {
public:
    ExtendedReal() = default;
    ExtendedReal(double v);  // NOLINT: implicit from a finite real is intended
    static ExtendedReal infinity();

    bool is_infinite() const { return infinite_; }
    double value() const;  // throws UsageError for the point at infinity
    std::string to_string() const;

    friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

/// The upper half-plane with four marked boundary points in positive cyclic order.
/// a-sides are [p1, p2] and [p3, p4].
struct IdealQuadrilateral {
    std::array<ExtendedReal, 4> p;

    /// Throws DomainError on coincident points or on negative cyclic order.
    static IdealQuadrilateral make(ExtendedReal p1, ExtendedReal p2, ExtendedReal p3, ExtendedReal p4);
    /// The same domain with vertices relabelled (p2, p3, p4, p1); swaps a- and b-sides.
    IdealQuadrilateral rotated() const { return {{p[1], p[2], p[3], p[0]}}; }
};

double agm(double a, double b);

/// K(r) = int_0^1 dx / sqrt((1 - x^2)(1 - r^2 x^2)) for 0 <= r < 1, by AGM.
double elliptic_k(double r);

/// mu(r) = (pi/2) K(sqrt(1 - r^2)) / K(r), the modulus of the unit disk slit along [0, r].
double grotzsch_mu(double r);
/// mu'(r) = -pi^2 / (4 r (1 - r^2) K(r)^2).
double grotzsch_mu_prime(double r);
/// (2/pi) log((1 + sqrt(1 - r^2))^2 / r), a strict lower bound for mu(r).
double grotzsch_mu_lower_bound(double r);

/// h(t) = mod H(inf, -1, 0, e^t) = (2/pi) mu(1/sqrt(1 + e^t)).
double h_of_t(double t);
/// h'(t) by the chain rule through mu'. Positive.
double h_derivative(double t);
/// The same derivative without the inner factor d(e^t)/dt = e^t; equals h'(t) e^{-t}.
/// Kept only to quantify that discrepancy in verification output.
double h_derivative_without_inner_factor(double t);

/// Image x > 0 of p4 under the real Moebius map sending (p1, p2, p3) to (inf, -1, 0).
double normalized_vertex(const IdealQuadrilateral& q);
/// mod H(inf, -1, 0, x) for any x > 0.
double quad_modulus_normalized(double x);
/// Conformal modulus (length of an a-side over the distance between the a-sides).
double quad_modulus(const IdealQuadrilateral& q);
/// Extremal length of the curves joining the a-sides, 1 / mod.
double extremal_length(const IdealQuadrilateral& q);

/// Height s = 4 arctan((e^b - 1)/(e^b + 1)) of the flat cylinder conformal to the
/// b-neighbourhood of a closed geodesic. Requires b > 0.
double cylinder_interval(double b);

struct AffineDilatation {
    double K = 1.0;
    double beltrami_modulus = 0.0;
};

/// Dilatation of the shear x + iy -> x + A y + iy.
AffineDilatation affine_dilatation(double A);

}  // namespace hypfn::conformal
