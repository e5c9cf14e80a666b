#pragma once

// Fenchel-Nielsen coordinate sequences on finite windows, the Fenchel-Nielsen distance and
// its variants, the sup-norm embedding, and pants-graph bookkeeping.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypfn/report.hpp"

namespace hypfn::fn {

/// Length and twist of one decomposition curve. Boundary curves of the surface carry no twist.
/// Twists use the angle normalization (a full Dehn twist adds 2 pi) and are not reduced mod 2 pi.
struct FNCoordinate {
    double length = 1.0;
    std::optional<double> twist;

    static FNCoordinate interior(double length, double twist);
    static FNCoordinate boundary(double length);
    bool is_boundary() const { return !twist.has_value(); }
};

enum class GeneratorKind { Constant, ExFn1X, ExFn1Y, ExFn2X, ExFn2Y, Table };

std::string to_string(GeneratorKind k);
GeneratorKind generator_kind_from_string(const std::string& s);

/// A lazily evaluated infinite coordinate sequence. All built-in kinds agree with the
/// constant structure (length 1, twist 0) beyond index n.
struct StructureGenerator {
    GeneratorKind kind = GeneratorKind::Constant;
    long n = 1;

    static StructureGenerator make(GeneratorKind kind, long n);
    FNCoordinate at(std::size_t index) const;  // 1-based
    /// First index from which the sequence is constant.
    std::size_t tail_start() const;
    double sup_length() const;
};

/// Coordinates of curves 1..size(). A literal table is the whole structure; a generator
/// window is a prefix of an infinite one.
class StructureWindow {
public:
    static StructureWindow from_table(std::vector<FNCoordinate> entries);
    static StructureWindow from_generator(const StructureGenerator& g, std::size_t window);

    std::size_t size() const { return entries_.size(); }
    const FNCoordinate& at(std::size_t index) const;  // 1-based
    const std::vector<FNCoordinate>& entries() const { return entries_; }
    const std::optional<StructureGenerator>& generator() const { return generator_; }
    bool is_table() const { return !generator_.has_value(); }
    /// True when nothing outside the window can change a supremum taken over it.
    bool covers_tail() const;

private:
    std::vector<FNCoordinate> entries_;
    std::optional<StructureGenerator> generator_;
};

enum class DistanceKind { FenchelNielsen, RawTwist, RawLength };

std::string to_string(DistanceKind k);
DistanceKind distance_kind_from_string(const std::string& s);

struct Distance {
    double value = 0.0;
    bool exact = true;  // false: supremum over the window only
    std::optional<std::size_t> attained_at;  // first index attaining a positive supremum
};

/// sup_i max(|log l_x - log l_y|, |l_x theta_x - l_y theta_y|); boundary curves use the length term.
Distance fn_distance(const StructureWindow& x, const StructureWindow& y);

/// RawTwist: max(|log ratio|, |theta_x - theta_y|); RawLength: max(|l_x - l_y|, |l_x theta_x - l_y theta_y|).
Distance fn_distance_variant(const StructureWindow& x, const StructureWindow& y, DistanceKind kind);

struct LinfPair {
    double log_length = 0.0;
    std::optional<double> length_twist;  // absent for boundary curves
};

std::vector<LinfPair> to_linf(const StructureWindow& x);

/// Sup-norm distance between two embedded windows of matching shape.
double sup_norm_distance(const std::vector<LinfPair>& a, const std::vector<LinfPair>& b);

struct UpperBoundResult {
    bool bounded = true;
    std::optional<std::size_t> witness;  // first index with length > M
    double sup_length = 0.0;             // over the examined range (window or whole sequence)
    bool closed_form = false;            // answered for the whole infinite sequence
    bool complete = false;               // upper-bounded structures are metrically complete
};

UpperBoundResult is_upper_bounded(const StructureWindow& x, double M);
UpperBoundResult is_upper_bounded(const StructureGenerator& g, double M);

struct WolpertResult {
    bool pass = true;
    double slack = 0.0;  // log K - |log(lx / ly)|
};

/// Two-sided length distortion bound under a K-quasiconformal map: ly <= K lx and lx <= K ly.
WolpertResult wolpert_check(double lx, double ly, double K);

/// A pants slot holds a curve id or a cusp.
struct Slot {
    std::optional<std::size_t> curve;

    static Slot cusp() { return {}; }
    static Slot of(std::size_t curve_id) { return {curve_id}; }
    bool is_cusp() const { return !curve.has_value(); }
};

struct PantsNode {
    std::size_t id = 0;
    std::array<Slot, 3> slots;
};

struct CurveInfo {
    bool boundary = false;
};

struct PantsGraph {
    std::vector<PantsNode> pants;
    std::map<std::size_t, CurveInfo> curves;
};

/// Structural checks: every curve has one or two incident slots, boundary curves exactly one,
/// slots only reference declared curves, pants ids are unique.
VerificationReport validate_pants_graph(const PantsGraph& g);

}  // namespace hypfn::fn
