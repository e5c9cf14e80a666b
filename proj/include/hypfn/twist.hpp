#pragma once

// Fenchel-Nielsen twist deformations: the explicit collar twist map, its dilatation,
// modulus lower bounds, and the seam-angle estimates behind the multi-twist comparison.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "hypfn/hyp_core.hpp"
#include "hypfn/report.hpp"

namespace hypfn::twist {

/// A twist of signed displacement t along a closed geodesic of length l, lifted so that
/// the geodesic is the imaginary axis and its collar is the sector |arg z - pi/2| <= angle.
struct TwistScenario {
    double curve_length = 1.0;
    double twist_time = 0.0;
    hyp::CollarData collar;

    static TwistScenario make(double curve_length, double twist_time);
};

/// The piecewise map: identity right of the collar sector, z e^t left of it, and
/// z exp(t (arg z - pi/2 + angle) / (2 angle)) inside (closed sector).
hyp::UpperHalfPlanePoint twist_map_eval(const TwistScenario& s, const hyp::UpperHalfPlanePoint& z);

struct TwistDilatation {
    double K = 1.0;
    double beltrami_modulus = 0.0;
    double shear = 0.0;  // |t| / (2 angle), the shear of the map in logarithmic coordinates
};

TwistDilatation twist_dilatation(const TwistScenario& s);

/// Complex dilatation of the twist map at z: (i c)/(2 - i c) z/conj(z) inside the sector, 0 outside,
/// with c = t / (2 angle).
std::complex<double> twist_beltrami_coefficient(const TwistScenario& s, const hyp::UpperHalfPlanePoint& z);

/// Compares the constructed dilatation against the lower bound h(t) for any map in the
/// homotopy class. Requires t > 0.
VerificationReport twist_lower_bound_check(const TwistScenario& s, double tolerance = 1e-10);

struct TwistDelta {
    double T = 0.0;      // h(T) = L
    double D = 0.0;      // min of h' on [0, T]
    double M = 0.0;      // log(1 + D T) / T
    double delta = 0.0;  // 1 / M; t <= delta log h(t) on (0, T]
};

/// Constant delta with t <= delta log K whenever the twist dilatation is at most L. Requires L > 1.
TwistDelta twist_delta(double L);

/// The geodesic through i making angle phi with the imaginary axis, c = cot(phi), cut at the
/// collar boundary ray at angle theta from the imaginary axis.
struct SeamAngleInstance {
    double cot_phi = 0.0;
    double theta = 0.0;
    double lambda = 1.0;  // |A|, from x^2 + y^2 - 2 c x - 1 = 0
    hyp::UpperHalfPlanePoint point_a;

    static SeamAngleInstance make(double cot_phi, double theta);
};

enum class DistanceInterpretation { ExpTwiceDistance, DistanceSquared };

struct SeamAngleKitReport {
    SeamAngleInstance instance;
    double dist_quantity = 0.0;    // squared cross-ratio of (i*, i, A, A*)
    double rhs_bound = 0.0;        // (2/3) c^2 sin^6(theta) / (1 - sin^2(theta))
    double direct_distance = 0.0;  // d(i, A)
    double circle_residual = 0.0;
    DistanceInterpretation matching = DistanceInterpretation::ExpTwiceDistance;
    double exp_form_error = 0.0;      // |quantity - e^{2d}| / e^{2d}
    double squared_form_error = 0.0;  // |quantity - d^2| / max(d^2, tiny)
    bool bound_holds_for_quantity = true;
    bool bound_holds_for_distance_squared = true;
};

SeamAngleKitReport seam_angle_kit(double cot_phi, double theta);

/// Lower bound for the angle between a seam-dual curve and a pants curve of length <= M:
/// arccot(((M + 4d)/e^d) (e^{2d} - 1)/(e^{2d} + 1)) with d = B(M).
double seam_angle_bound(double M);

/// Twists t_i along curves of lengths l_i <= L0.
struct MultiTwistFamily {
    std::vector<double> lengths;
    std::vector<double> times;
    double length_cap = 1.0;      // L0
    double dilatation_cap = 1.0;  // T0 (bound on d_qc)

    static MultiTwistFamily make(std::vector<double> lengths, std::vector<double> times, double length_cap,
                                 double dilatation_cap);
};

/// Geometry of the lifted dual curve used in the per-curve modulus estimate.
struct MultiTwistGeometry {
    /// cot of the crossing angle. Defaults to the worst case allowed by seam_angle_bound(L0).
    std::optional<double> seam_cot;
    /// Multiplier on the displaced endpoint, f(x1) < D e^t x1. Left implicit by the estimate;
    /// reported as an assumption.
    double endpoint_constant = 1.0;
};

struct MultiTwistRow {
    std::size_t index = 0;
    double length = 0.0;
    double time = 0.0;
    double lower_K = 1.0;  // modulus-quotient lower bound g(|t|)
    double upper_K = 1.0;  // dilatation of the constructed collar twist
};

struct MultiTwistReport {
    BoundReport log_dilatation;  // lower = max log g, upper = max log K_constructed
    double fn_distance = 0.0;    // sup |t_i| over the window
    std::optional<double> c_empirical;  // max |t_i| / log g(|t_i|) over nonzero twists
    double seam_cot = 0.0;
    double endpoint_ratio = 1.0;  // |x1| / x2 of the lifted dual curve
    bool lower_below_upper = true;
    bool within_dilatation_cap = true;  // constructed log K < T0
    std::vector<MultiTwistRow> rows;
};

MultiTwistReport multitwist_fn_bound(const MultiTwistFamily& f, std::size_t window,
                                     const MultiTwistGeometry& geometry = {});

}  // namespace hypfn::twist
