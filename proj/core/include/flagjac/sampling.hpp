#pragma once

#include "flagjac/appendix.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace flagjac {

using Point6 = std::array<double, kNumVars>;

/// Platform-independent pseudorandom source: mt19937_64 with explicit
/// conversions (the standard distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Box-Muller).
    double normal();

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Uniformly distributed unit vectors.
std::vector<Point6> random_unit_vectors(std::uint64_t seed, int n);

/// Deterministic rational points on the unit sphere (inverse stereographic
/// projection of small rational points of Q^5).
std::vector<RationalPoint> rational_sphere_points(int n);

Point6 to_point(const RationalPoint& x);

/// The fixed rational points followed by seeded random unit vectors.
std::vector<Point6> sphere_sample(std::uint64_t seed, int total, int rational = 64);

}  // namespace flagjac
