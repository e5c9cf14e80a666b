#include "hypfn/twist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypfn/conformal.hpp"
#include "hypfn/errors.hpp"

namespace hypfn::twist {

using std::numbers::pi;

TwistScenario TwistScenario::make(double curve_length, double twist_time) {
    if (!std::isfinite(twist_time)) throw DomainError("twist time must be finite");
    TwistScenario s;
    s.curve_length = curve_length;
    s.twist_time = twist_time;
    s.collar = hyp::collar_data(curve_length);  // validates l > 0
    return s;
}

hyp::UpperHalfPlanePoint twist_map_eval(const TwistScenario& s, const hyp::UpperHalfPlanePoint& z) {
    const auto p = hyp::UpperHalfPlanePoint::make(z.x, z.y);
    const double arg = std::atan2(p.y, p.x);
    const double lo = 0.5 * pi - s.collar.angle;
    const double hi = 0.5 * pi + s.collar.angle;
    double scale = 1.0;
    if (arg >= lo && arg <= hi) {
        scale = std::exp(s.twist_time * (arg - lo) / (2.0 * s.collar.angle));
    } else if (arg > hi) {
        scale = std::exp(s.twist_time);
    }
    return {p.x * scale, p.y * scale};
}

TwistDilatation twist_dilatation(const TwistScenario& s) {
    const double shear = std::abs(s.twist_time) / (2.0 * s.collar.angle);
    const auto a = conformal::affine_dilatation(shear);
    return {a.K, a.beltrami_modulus, shear};
}

std::complex<double> twist_beltrami_coefficient(const TwistScenario& s, const hyp::UpperHalfPlanePoint& z) {
    const double arg = std::atan2(z.y, z.x);
    if (std::abs(arg - 0.5 * pi) > s.collar.angle) return {0.0, 0.0};
    const std::complex<double> ic(0.0, s.twist_time / (2.0 * s.collar.angle));
    const std::complex<double> zc(z.x, z.y);
    return ic / (2.0 - ic) * (zc / std::conj(zc));
}

VerificationReport twist_lower_bound_check(const TwistScenario& s, double tolerance) {
    if (!(s.twist_time > 0.0)) throw DomainError("twist lower bound requires t > 0");
    VerificationReport rep;
    rep.subject = "twist dilatation >= h(t)";
    rep.tolerance = tolerance;
    rep.add("K(constructed) >= h(t)", {{"l", s.curve_length}, {"t", s.twist_time}}, twist_dilatation(s).K,
            conformal::h_of_t(s.twist_time));
    return rep;
}

TwistDelta twist_delta(double L) {
    if (!std::isfinite(L) || !(L > 1.0)) throw DomainError("twist_delta requires a finite L > 1");
    double lo = 0.0;
    double hi = 1.0;
    while (conformal::h_of_t(hi) < L) hi *= 2.0;
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (conformal::h_of_t(mid) < L ? lo : hi) = mid;
    }
    TwistDelta out;
    out.T = hi;
    constexpr int kSamples = 2000;
    out.D = conformal::h_derivative(0.0);
    for (int k = 1; k <= kSamples; ++k) {
        out.D = std::min(out.D, conformal::h_derivative(out.T * k / kSamples));
    }
    out.M = std::log1p(out.D * out.T) / out.T;
    out.delta = 1.0 / out.M;
    return out;
}

SeamAngleInstance SeamAngleInstance::make(double cot_phi, double theta) {
    if (!std::isfinite(cot_phi) || cot_phi < 0.0) throw DomainError("cot(phi) must be finite and >= 0");
    if (!(theta > 0.0 && theta < 0.5 * pi)) throw DomainError("theta must lie in (0, pi/2)");
    SeamAngleInstance inst;
    inst.cot_phi = cot_phi;
    inst.theta = theta;
    const double cs = cot_phi * std::sin(theta);
    inst.lambda = cs + std::sqrt(cs * cs + 1.0);
    inst.point_a = hyp::UpperHalfPlanePoint::make(inst.lambda * std::sin(theta), inst.lambda * std::cos(theta));
    return inst;
}

SeamAngleKitReport seam_angle_kit(double cot_phi, double theta) {
    SeamAngleKitReport rep;
    rep.instance = SeamAngleInstance::make(cot_phi, theta);
    const double c = cot_phi;
    const double root = std::sqrt(1.0 + c * c);
    const double ax = rep.instance.point_a.x;
    const double ay = rep.instance.point_a.y;

    const double first = ((c + root) * (c + root) + 1.0) / ((root - c) * (root - c) + 1.0);
    const double second = ((ax - c + root) * (ax - c + root) + ay * ay) / ((-ax + c + root) * (-ax + c + root) + ay * ay);
    rep.dist_quantity = first * second;

    const double s = std::sin(theta);
    const double s2 = s * s;
    rep.rhs_bound = (2.0 / 3.0) * c * c * s2 * s2 * s2 / (1.0 - s2);
    rep.direct_distance = hyp::hyp_distance({0.0, 1.0}, rep.instance.point_a);
    rep.circle_residual = ax * ax + ay * ay - 2.0 * c * ax - 1.0;

    const double e2d = std::exp(2.0 * rep.direct_distance);
    const double d2 = rep.direct_distance * rep.direct_distance;
    rep.exp_form_error = std::abs(rep.dist_quantity - e2d) / e2d;
    rep.squared_form_error = std::abs(rep.dist_quantity - d2) / std::max(d2, 1e-300);
    rep.matching = rep.exp_form_error <= rep.squared_form_error ? DistanceInterpretation::ExpTwiceDistance
                                                                : DistanceInterpretation::DistanceSquared;
    rep.bound_holds_for_quantity = rep.dist_quantity >= rep.rhs_bound;
    rep.bound_holds_for_distance_squared = d2 >= rep.rhs_bound;
    return rep;
}

double seam_angle_bound(double M) {
    const double d = hyp::collar_margin(M);  // validates M > 0
    const double cot_bound = (M + 4.0 * d) * std::exp(-d) * std::tanh(d);
    return std::atan2(1.0, cot_bound);
}

MultiTwistFamily MultiTwistFamily::make(std::vector<double> lengths, std::vector<double> times, double length_cap,
                                        double dilatation_cap) {
    if (lengths.size() != times.size()) throw UsageError("lengths and times must have the same size");
    if (!(length_cap > 0.0) || !std::isfinite(length_cap)) throw DomainError("L0 must be finite and > 0");
    if (!(dilatation_cap > 0.0) || !std::isfinite(dilatation_cap)) throw DomainError("T0 must be finite and > 0");
    for (double l : lengths) {
        if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("curve lengths must be finite and > 0");
    }
    for (double t : times) {
        if (!std::isfinite(t)) throw DomainError("twist times must be finite");
    }
    return {std::move(lengths), std::move(times), length_cap, dilatation_cap};
}

MultiTwistReport multitwist_fn_bound(const MultiTwistFamily& f, std::size_t window, const MultiTwistGeometry& geometry) {
    if (window == 0 || window > f.lengths.size()) {
        throw UsageError("window " + std::to_string(window) + " exceeds the " + std::to_string(f.lengths.size()) +
                         " available curves");
    }
    if (!(geometry.endpoint_constant > 0.0)) throw DomainError("endpoint constant D must be > 0");

    MultiTwistReport rep;
    rep.seam_cot = geometry.seam_cot ? *geometry.seam_cot : 1.0 / std::tan(seam_angle_bound(f.length_cap));
    if (!(rep.seam_cot >= 0.0)) throw DomainError("seam cot must be >= 0");
    const double root = std::sqrt(1.0 + rep.seam_cot * rep.seam_cot);
    // endpoints x1 = c - root < 0 < x2 = c + root of the lifted dual curve through i
    rep.endpoint_ratio = (root - rep.seam_cot) / (root + rep.seam_cot);
    const double base_mod = conformal::quad_modulus_normalized(rep.endpoint_ratio);

    double max_log_lower = 0.0;
    double max_log_upper = 0.0;
    for (std::size_t i = 0; i < window; ++i) {
        const double l = f.lengths[i];
        if (l > f.length_cap) {
            throw AssumptionError("curve " + std::to_string(i + 1) + " has length " + std::to_string(l) +
                                  " above L0 = " + std::to_string(f.length_cap));
        }
        const double t = f.times[i];
        MultiTwistRow row;
        row.index = i + 1;
        row.length = l;
        row.time = t;
        if (t != 0.0) {
            const double moved = geometry.endpoint_constant * rep.endpoint_ratio * std::exp(std::abs(t));
            row.lower_K = conformal::quad_modulus_normalized(moved) / base_mod;
        }
        row.upper_K = twist_dilatation(TwistScenario::make(l, t)).K;
        max_log_lower = std::max(max_log_lower, std::log(row.lower_K));
        max_log_upper = std::max(max_log_upper, std::log(row.upper_K));
        rep.fn_distance = std::max(rep.fn_distance, std::abs(t));
        if (t != 0.0 && row.lower_K > 1.0) {
            const double ratio = std::abs(t) / std::log(row.lower_K);
            rep.c_empirical = rep.c_empirical ? std::max(*rep.c_empirical, ratio) : ratio;
        }
        if (row.lower_K > row.upper_K) rep.lower_below_upper = false;
        rep.rows.push_back(row);
    }
    rep.within_dilatation_cap = max_log_upper < f.dilatation_cap;

    auto& b = rep.log_dilatation;
    b.quantity = "log K of the multi-twist (sandwich for d_qc)";
    b.lower = max_log_lower;
    b.upper = max_log_upper;
    b.assumptions = {{"L0", f.length_cap},
                     {"T0", f.dilatation_cap},
                     {"window", static_cast<double>(window)},
                     {"seam_cot", rep.seam_cot},
                     {"D", geometry.endpoint_constant}};
    b.provenance = "multi-twist comparison d_FN <= C d_qc; lower from modulus quotient g(t_i), upper from collar shear";
    b.notes.push_back("C_empirical is an observed ratio, not a certified constant");
    if (!geometry.seam_cot) b.notes.push_back("seam_cot taken at the worst angle allowed by the length cap L0");
    b.notes.push_back("endpoint constant D is left implicit by the estimate; D = " +
                      std::to_string(geometry.endpoint_constant) + " assumed");
    if (!rep.lower_below_upper) b.notes.push_back("lower estimate exceeds constructed upper bound at some curve");
    return rep;
}

}  // namespace hypfn::twist
