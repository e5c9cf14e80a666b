#include "hypfn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypfn/errors.hpp"
#include "hypfn/hyp_core.hpp"

namespace hypfn::bounds {

namespace {

void require_d(double d, const char* what) {
    if (!std::isfinite(d) || d < 0.0) throw DomainError(std::string(what) + " must be finite and >= 0");
}

std::string discrepancy_note(const BoundAssumptions& a) {
    return "L(N) = " + std::to_string(a.L_of_N) + " from the collar margin; the printed closed form 2 arctan(2 e^N) = " +
           std::to_string(a.L_printed) + " disagrees and is not used";
}

BoundReport base(std::string quantity, const BoundAssumptions& a, std::string provenance) {
    BoundReport r;
    r.quantity = std::move(quantity);
    r.lower = 0.0;
    r.assumptions = a.as_named();
    r.provenance = std::move(provenance);
    r.notes.push_back(discrepancy_note(a));
    return r;
}

double twist_term(double d, double L) { return (d / L) * std::sqrt(1.0 + d * d / (16.0 * L * L)); }

}  // namespace

double l_of_n(double N) { return hyp::theta_of_d(hyp::collar_margin(N)); }

double l_of_n_printed(double N) {
    if (!(N > 0.0)) throw DomainError("N must be > 0");
    return 2.0 * std::atan(2.0 * std::exp(N));
}

BoundAssumptions BoundAssumptions::make(double N, double bishop_C) {
    if (!std::isfinite(N) || !(N > 0.0)) throw DomainError("length cap N must be finite and > 0");
    if (!std::isfinite(bishop_C) || bishop_C < 0.0) throw DomainError("constant C(N) must be finite and >= 0");
    return {N, bishop_C, l_of_n(N), l_of_n_printed(N)};
}

NamedValues BoundAssumptions::as_named() const {
    return {{"N", N}, {"C", bishop_C}, {"L(N)", L_of_N}, {"L_printed(N)", L_printed}};
}

BoundReport bishop_length_bound(const std::array<double, 3>& lengths_a, const std::array<double, 3>& lengths_b,
                                const BoundAssumptions& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (double l : {lengths_a[i], lengths_b[i]}) {
            if (!std::isfinite(l) || !(l > 0.0)) throw DomainError("pants lengths must be finite and > 0");
            if (l > a.N) {
                throw AssumptionError("pants length " + std::to_string(l) + " exceeds the cap N = " + std::to_string(a.N));
            }
        }
        worst = std::max(worst, std::abs(std::log(lengths_a[i]) - std::log(lengths_b[i])));
    }
    auto r = base("log K of a map between pants", a,
                  "pants with boundary lengths at most N: log K <= 3 C(N) max |log(l_i/m_i)|");
    r.upper = 3.0 * a.bishop_C * worst;
    return r;
}

BoundReport twist_change_bound(double d, const BoundAssumptions& a) {
    require_d(d, "d_FN");
    auto r = base("log K for a pure twist change", a,
                  "equal lengths, twists differing by d: log K <= (d/L) sqrt(1 + d^2/(16 L^2))");
    r.upper = twist_term(d, a.L_of_N);
    return r;
}

BoundReport combined_qc_upper(double d, const BoundAssumptions& a) {
    require_d(d, "d_FN");
    auto r = base("log K from d_FN", a, "lengths and twists together: log K <= d [3 C + (1/L) sqrt(1 + d^2/(16 L^2))]");
    r.upper = 3.0 * a.bishop_C * d + twist_term(d, a.L_of_N);
    return r;
}

BoundReport fn_from_qc_upper(double logK, const BoundAssumptions& a) {
    require_d(logK, "log K");
    auto r = base("d_FN from log K", a, "triangle inequality through the length-matching map: d_FN <= (2 + 3 C) log K");
    r.upper = (2.0 + 3.0 * a.bishop_C) * logK;
    return r;
}

Sandwich bilipschitz_sandwich(double d, const BoundAssumptions& a) {
    Sandwich s;
    s.qc_from_fn = combined_qc_upper(d, a);
    s.fn_from_qc = fn_from_qc_upper(*s.qc_from_fn.upper, a);
    s.inverse_constant = 2.0 + 3.0 * a.bishop_C;
    s.forward_lipschitz = d > 0.0 ? *s.qc_from_fn.upper / d : 3.0 * a.bishop_C + 1.0 / a.L_of_N;
    s.consistent = *s.fn_from_qc.upper >= d;
    return s;
}

}  // namespace hypfn::bounds
