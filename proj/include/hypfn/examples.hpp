#pragma once

// Example structures: the fn1/fn2 pairs that separate d_FN from its variants, and the chain of
// doubled one-cusped pants whose decomposition can be re-cut to become upper-bounded.

#include <cstddef>
#include <string>
#include <utility>

#include "hypfn/fn_space.hpp"

namespace hypfn::examples {

enum class ExampleKind { Pants1, Fn1, Fn2 };

std::string to_string(ExampleKind k);
ExampleKind example_kind_from_string(const std::string& s);

struct ExampleSpec {
    ExampleKind kind = ExampleKind::Fn1;
    long n = 1;
    std::size_t window = 1;

    static ExampleSpec make(ExampleKind kind, long n, std::size_t window);
};

/// The shortest arc from the length-n boundary of the pants (cusp, 1, n) to itself, separating
/// the cusp from the length-1 boundary: cosh^2 l = (cosh n + cosh 1)^2 / sinh^2 n.
struct ArcLength {
    double cosh_sq = 1.0;
    double l = 0.0;
    double bound_3coth = 0.0;  // printed bound 3 coth^2 1
    double bound_4coth = 0.0;  // value at n = 1, 4 coth^2 1
};

ArcLength pants1_arc_length(double n);

/// fn1: lengths 1/n at index n, twists 0 vs 2 pi there. fn2: lengths 1/n vs 1/n^2 at index n.
/// Both windows are backed by the matching generators. Throws UsageError if window < n.
std::pair<fn::StructureWindow, fn::StructureWindow> make_fn_pair(ExampleKind kind, long n, std::size_t window);

/// Chain X_1, X_2, ..., X_{n_max}; X_n is two copies of the pants (cusp, 1, n) glued along the
/// length-n curve. Curve 1 is the free length-1 boundary of X_1, curve 2n the curve of X_n being
/// cut (gamma_n in the original decomposition, the doubled arc nu_n after re-cutting) and curve
/// 2n + 1 the length-1 curve joining X_n to X_{n+1} (a boundary curve for n = n_max).
struct Pants1Chain {
    long n_max = 1;
    fn::PantsGraph original;
    fn::PantsGraph recut;
    fn::StructureWindow original_lengths;  // gamma_n has length n, every twist 0
    fn::StructureWindow recut_lengths;     // nu_n has length 2 l(n), every twist 0
};

/// Largest n_max whose re-cut lengths 2 l(n) are representable (l(n) ~ e^{-n/2}).
inline constexpr long kPants1MaxBlocks = 700;

/// Throws DomainError for n_max outside [1, kPants1MaxBlocks].
Pants1Chain pants1_graph(long n_max);

/// Original-decomposition lengths alone, for any n_max >= 1.
fn::StructureWindow pants1_original_lengths(long n_max);

/// The re-cut lengths are bounded by this, for every n_max: max(1, 2 l(1)).
double pants1_recut_cap();

/// Index of the first original-decomposition curve longer than M: gamma_n with n = floor(M) + 1.
/// Available for every M, which certifies that no cap works.
struct Witness {
    std::size_t index = 0;
    double length = 0.0;
};

Witness pants1_original_witness(double M);

}  // namespace hypfn::examples
