#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace hypfn {

/// Seeded mt19937_64 with a fixed 53-bit mapping to [0, 1), so sample streams do not depend on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double log_uniform(double lo, double hi) { return lo * std::exp(std::log(hi / lo) * uniform01()); }
    /// Integer in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform01() * static_cast<double>(n)); }
    bool coin(double p = 0.5) { return uniform01() < p; }

private:
    std::mt19937_64 eng_;
};

}  // namespace hypfn
