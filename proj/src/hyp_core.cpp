#include "hypfn/hyp_core.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "hypfn/errors.hpp"

namespace hypfn::hyp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || !(v > 0.0)) {
        throw DomainError(std::string(what) + " must be finite and > 0 (got " + std::to_string(v) + ")");
    }
}

std::size_t side_index(int i) {
    if (i < 1 || i > 3) throw UsageError("side index must be 1, 2 or 3 (got " + std::to_string(i) + ")");
    return static_cast<std::size_t>(i - 1);
}

// (i, j, k) is a cyclic rotation of (0, 1, 2) starting at i
struct Cyclic {
    std::size_t i, j, k;
};
Cyclic cyclic(std::size_t i) { return {i, (i + 1) % 3, (i + 2) % 3}; }

std::string label(const char* prefix, std::size_t zero_based) {
    return prefix + std::to_string(zero_based + 1);
}

}  // namespace

UpperHalfPlanePoint UpperHalfPlanePoint::make(double x, double y) {
    if (!std::isfinite(x)) throw DomainError("x must be finite");
    require_positive(y, "Im z");
    return {x, y};
}

HexagonAlternatingSides HexagonAlternatingSides::make(double a1, double a2, double a3) {
    require_positive(a1, "a1");
    require_positive(a2, "a2");
    require_positive(a3, "a3");
    return {a1, a2, a3};
}

PantsBoundaryLengths PantsBoundaryLengths::make(double l1, double l2, double l3) {
    for (double v : {l1, l2, l3}) {
        if (!std::isfinite(v) || v < 0.0) throw DomainError("pants boundary lengths must be finite and >= 0");
    }
    return {{l1, l2, l3}};
}

double arcosh(double x) {
    if (!(x >= 1.0)) throw DomainError("arcosh argument must be >= 1");
    if (std::isinf(x)) return kInf;
    if (x > 1e8) return std::log(x) + std::log(2.0);
    return std::log(x + std::sqrt((x - 1.0) * (x + 1.0)));
}

double arcosh1p(double delta) {
    if (!(delta >= 0.0)) throw DomainError("arcosh1p argument must be >= 0");
    if (std::isinf(delta)) return kInf;
    if (delta > 1e8) return arcosh(1.0 + delta);
    return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

double hyp_distance(const UpperHalfPlanePoint& z, const UpperHalfPlanePoint& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    const double delta = (dx * dx + dy * dy) / (2.0 * z.y * w.y);
    return arcosh1p(delta);
}

double hyp_distance_cross_ratio(const UpperHalfPlanePoint& z, const UpperHalfPlanePoint& w) {
    using C = std::complex<double>;
    if (z.x == w.x && z.y == w.y) return 0.0;
    const C zc(z.x, z.y);
    const C wc(w.x, w.y);

    if (z.x == w.x) {
        // vertical geodesic: the upper endpoint is at infinity and its factors cancel
        const C foot(z.x, 0.0);
        const double ratio = z.y < w.y ? std::abs(wc - foot) / std::abs(zc - foot)
                                       : std::abs(zc - foot) / std::abs(wc - foot);
        return std::log(ratio);
    }

    // geodesic = half-circle centred at c on the real axis
    const double c = (std::norm(wc) - std::norm(zc)) / (2.0 * (w.x - z.x));
    const double r = std::hypot(z.x - c, z.y);
    const double far = c >= 0.0 ? c + r : c - r;
    const double near = (2.0 * c * z.x - std::norm(zc)) / far;  // product of the endpoints is c^2 - r^2
    const double right = std::max(far, near);
    const double left = std::min(far, near);

    // order z*, z, w, w* along the geodesic
    const C z_star(z.x < w.x ? left : right, 0.0);
    const C w_star(z.x < w.x ? right : left, 0.0);
    const double ratio = (std::abs(zc - w_star) * std::abs(wc - z_star)) /
                         (std::abs(wc - w_star) * std::abs(zc - z_star));
    return std::log(ratio);
}

double theta_of_d(double d) {
    require_positive(d, "distance d");
    // (e^d - 1)/(e^d + 1) = tanh(d/2)
    return 2.0 * std::atan(std::tanh(0.5 * d));
}

double collar_margin(double l) {
    require_positive(l, "curve length l");
    return 0.5 * std::log1p(2.0 / std::expm1(l));
}

double collar_halfwidth(double l) {
    require_positive(l, "curve length l");
    return std::asinh(1.0 / std::sinh(0.5 * l));
}

CollarData collar_data(double l) {
    CollarData c;
    c.margin = collar_margin(l);
    c.halfwidth = collar_halfwidth(l);
    c.angle = theta_of_d(c.halfwidth);
    return c;
}

std::array<double, 3> hexagon_sides(const HexagonAlternatingSides& a) {
    const auto s = HexagonAlternatingSides::make(a.a1, a.a2, a.a3).as_array();
    std::array<double, 3> b{};
    for (std::size_t i = 0; i < 3; ++i) b[i] = cusped_hexagon_side(s, static_cast<int>(i + 1));
    return b;
}

double hexagon_altitude_cosh_sq(const HexagonAlternatingSides& a, int i) {
    const auto s = HexagonAlternatingSides::make(a.a1, a.a2, a.a3).as_array();
    return cusped_altitude_cosh_sq(s, i);
}

double hexagon_altitude(const HexagonAlternatingSides& a, int i) {
    return arcosh(std::sqrt(hexagon_altitude_cosh_sq(a, i)));
}

double cusped_hexagon_side(const std::array<double, 3>& a, int i) {
    const auto [ii, j, k] = cyclic(side_index(i));
    for (double v : a) {
        if (!std::isfinite(v) || v < 0.0) throw DomainError("hexagon sides must be finite and >= 0");
    }
    const double denom = std::sinh(a[j]) * std::sinh(a[k]);
    if (denom == 0.0) return kInf;
    // cosh b_i - 1 = (cosh a_i + cosh(a_j - a_k)) / (sinh a_j sinh a_k)
    return arcosh1p((std::cosh(a[ii]) + std::cosh(a[j] - a[k])) / denom);
}

double cusped_altitude_cosh_sq(const std::array<double, 3>& a, int i) {
    const std::size_t idx = side_index(i);
    for (double v : a) {
        if (!std::isfinite(v) || v < 0.0) throw DomainError("hexagon sides must be finite and >= 0");
    }
    if (!(a[idx] > 0.0)) throw DomainError("altitude base side must be > 0");
    const double c1 = std::cosh(a[0]);
    const double c2 = std::cosh(a[1]);
    const double c3 = std::cosh(a[2]);
    const double s = std::sinh(a[idx]);
    return (-1.0 + c1 * c1 + c2 * c2 + c3 * c3 + 2.0 * c1 * c2 * c3) / (s * s);
}

VerificationReport verify_pants_collar(const PantsBoundaryLengths& l, double tolerance) {
    VerificationReport rep;
    rep.subject = "pants collar disjointness";
    rep.tolerance = tolerance;

    const auto pants = PantsBoundaryLengths::make(l.l[0], l.l[1], l.l[2]);
    const NamedValues inputs{{"l1", pants.l[0]}, {"l2", pants.l[1]}, {"l3", pants.l[2]}};
    const std::array<double, 3> a{0.5 * pants.l[0], 0.5 * pants.l[1], 0.5 * pants.l[2]};

    for (std::size_t jj = 0; jj < 3; ++jj) {
        const auto [j, k1, k2] = cyclic(jj);
        const std::string bj = label("B(l", j) + ")";
        if (pants.is_cusp(static_cast<int>(j))) {
            for (std::size_t k : {k1, k2}) rep.skip(label("b", k) + "/2 >= " + bj, inputs, "cusp boundary");
            rep.skip(label("h", j) + " >= " + bj, inputs, "cusp boundary");
            continue;
        }
        const double lj = pants.l[j];
        const double margin = collar_margin(lj);
        const double coth_a = 1.0 / std::tanh(a[j]);
        const double em1 = std::expm1(lj);
        const double log_ratio = 0.5 * std::log((em1 + 2.0) / em1);  // 1/2 log((e^l + 1)/(e^l - 1))
        const double seam_floor = 0.5 * arcosh(coth_a);

        for (std::size_t k : {k1, k2}) {
            const double half_b = 0.5 * cusped_hexagon_side(a, static_cast<int>(k + 1));
            rep.add(label("b", k) + "/2 >= " + bj, inputs, half_b, margin);
            rep.add(label("b", k) + "/2 >= 1/2 arcosh(coth a" + std::to_string(j + 1) + ")", inputs, half_b,
                    seam_floor, true);
        }
        rep.add("1/2 arcosh(coth a" + std::to_string(j + 1) + ") >= 1/2 log((e^l+1)/(e^l-1))", inputs,
                seam_floor, log_ratio, true);
        rep.add("1/2 log((e^l+1)/(e^l-1)) >= " + bj, inputs, log_ratio, margin, true);

        const double h = arcosh(std::sqrt(cusped_altitude_cosh_sq(a, static_cast<int>(j + 1))));
        rep.add(label("h", j) + " >= " + bj, inputs, h, margin);

        const double sinh_a = std::sinh(a[j]);
        const double alt_floor = arcosh(std::sqrt(1.0 + 2.0 * coth_a / sinh_a));
        const double e_half = std::exp(0.5 * lj);
        const double log_floor = 0.5 * std::log1p(4.0 * e_half * (em1 + 2.0) / (em1 * em1));
        rep.add(label("h", j) + " >= arcosh(sqrt(1 + 2 coth a / sinh a))", inputs, h, alt_floor, true);
        rep.add("arcosh(sqrt(1 + 2 coth a / sinh a)) >= 1/2 log(1 + 4 e^(l/2)(e^l+1)/(e^l-1)^2)", inputs,
                alt_floor, log_floor, true);
        rep.add("1/2 log(1 + 4 e^(l/2)(e^l+1)/(e^l-1)^2) >= " + bj, inputs, log_floor, margin, true);
    }
    return rep;
}

}  // namespace hypfn::hyp
