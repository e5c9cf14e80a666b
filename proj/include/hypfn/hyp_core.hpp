#pragma once

// Upper-half-plane geometry and right-angled hexagon / pants trigonometry.

#include <array>

#include "hypfn/report.hpp"

namespace hypfn::hyp {

/// A point x + iy of the upper half-plane, y > 0.
struct UpperHalfPlanePoint {
    double x = 0.0;
    double y = 1.0;

    /// Throws DomainError unless y > 0 and both coordinates are finite.
    static UpperHalfPlanePoint make(double x, double y);
};

/// Three pairwise non-consecutive sides a1, a2, a3 of a right-angled hexagon.
struct HexagonAlternatingSides {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    static HexagonAlternatingSides make(double a1, double a2, double a3);
    std::array<double, 3> as_array() const { return {a1, a2, a3}; }
};

/// Boundary lengths of a pair of pants; 0 encodes a cusp.
struct PantsBoundaryLengths {
    std::array<double, 3> l{};

    static PantsBoundaryLengths make(double l1, double l2, double l3);
    bool is_cusp(int i) const { return l[static_cast<std::size_t>(i)] == 0.0; }
};

struct CollarData {
    double margin = 0.0;     // B(l): disjoint-collar width inside a pair of pants
    double halfwidth = 0.0;  // omega: sinh(omega) sinh(l/2) = 1
    double angle = 0.0;      // theta(omega), half-opening of the collar sector about the imaginary axis
};

// arcosh(x) = log(x + sqrt((x-1)(x+1))), accurate near x = 1.
double arcosh(double x);
// arcosh(1 + delta) without forming 1 + delta.
double arcosh1p(double delta);

/// Hyperbolic distance, cosh d = 1 + |z-w|^2 / (2 Im z Im w).
double hyp_distance(const UpperHalfPlanePoint& z, const UpperHalfPlanePoint& w);

/// Hyperbolic distance from the cross-ratio with the endpoints z*, w* of the geodesic through z, w:
/// d = log |(z - w*)(w - z*) / ((w - w*)(z - z*))|.
double hyp_distance_cross_ratio(const UpperHalfPlanePoint& z, const UpperHalfPlanePoint& w);

/// Angle at the origin subtended by a hyperbolic distance d from the imaginary axis:
/// theta(d) = 2 arctan((e^d - 1)/(e^d + 1)). Requires d > 0.
double theta_of_d(double d);

/// B(l) = 1/2 log(1 + 2/(e^l - 1)). Requires l > 0.
double collar_margin(double l);

/// omega(l) = arsinh(1 / sinh(l/2)). Requires l > 0.
double collar_halfwidth(double l);

CollarData collar_data(double l);

/// Remaining sides (b1, b2, b3), with b_i opposite a_i:
/// cosh b1 = (cosh a1 + cosh a2 cosh a3) / (sinh a2 sinh a3), cyclically.
std::array<double, 3> hexagon_sides(const HexagonAlternatingSides& a);

/// Length h_i of the common perpendicular between a_i and b_i. i is 1-based.
double hexagon_altitude(const HexagonAlternatingSides& a, int i);
double hexagon_altitude_cosh_sq(const HexagonAlternatingSides& a, int i);

// Variants that admit a zero side (cusp limit, cosh 0 = 1). A side adjacent to two sides
// of which one is a cusp is infinite. Sides must be >= 0; the altitude index must point at
// a positive side.
double cusped_hexagon_side(const std::array<double, 3>& a, int i);
double cusped_altitude_cosh_sq(const std::array<double, 3>& a, int i);

/// Checks b_k/2 >= B(l_j) for the two seams k != j and h_j >= B(l_j), for every
/// non-cusp boundary j, on the hexagon with a_i = l_i/2. Intermediate steps of the
/// estimate are attached as intermediate checks.
VerificationReport verify_pants_collar(const PantsBoundaryLengths& l, double tolerance = 1e-12);

}  // namespace hypfn::hyp
