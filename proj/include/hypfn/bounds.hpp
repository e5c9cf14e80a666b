#pragma once

// Comparison bounds between the Fenchel-Nielsen distance and log K of quasiconformal maps,
// for structures with all decomposition lengths at most N.

#include <array>

#include "hypfn/report.hpp"

namespace hypfn::bounds {

/// Length cap N and the user-supplied constant C(N) of the pants-to-pants length bound.
/// L(N) is derived, never entered.
struct BoundAssumptions {
    double N = 1.0;
    double bishop_C = 1.0;
    double L_of_N = 0.0;
    double L_printed = 0.0;  // 2 arctan(2 e^N), kept for comparison only

    static BoundAssumptions make(double N, double bishop_C);
    NamedValues as_named() const;
};

/// L(N) = 2 arctan((e^B - 1)/(e^B + 1)) = 2 arctan(tanh(B/2)) with B = B(N) the collar margin.
double l_of_n(double N);
/// The printed closed form 2 arctan(2 e^N). Not used in any bound.
double l_of_n_printed(double N);

/// upper = 3 C max_i |log(l_i / m_i)|. Throws AssumptionError if a length exceeds N.
BoundReport bishop_length_bound(const std::array<double, 3>& lengths_a, const std::array<double, 3>& lengths_b,
                                const BoundAssumptions& a);

/// Equal lengths, twists differing by d in the d_FN sense: (d / L) sqrt(1 + d^2 / (16 L^2)).
BoundReport twist_change_bound(double d, const BoundAssumptions& a);

/// d [3 C + (1/L) sqrt(1 + d^2 / (16 L^2))].
BoundReport combined_qc_upper(double d, const BoundAssumptions& a);

/// d_FN <= (2 + 3 C) log K.
BoundReport fn_from_qc_upper(double logK, const BoundAssumptions& a);

struct Sandwich {
    BoundReport qc_from_fn;  // combined_qc_upper(d)
    BoundReport fn_from_qc;  // fn_from_qc_upper applied to the combined upper
    double inverse_constant = 0.0;  // 2 + 3 C
    double forward_lipschitz = 0.0;  // combined upper / d, or its limit 3 C + 1/L at d = 0
    bool consistent = true;          // fn_from_qc.upper >= d
};

Sandwich bilipschitz_sandwich(double d, const BoundAssumptions& a);

}  // namespace hypfn::bounds
