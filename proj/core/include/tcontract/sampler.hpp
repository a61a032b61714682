#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tcontract/metric_space.hpp"

namespace tcontract {

enum class SampleStrategy { Grid, UniformRandom, Hybrid };

/// Deterministic generator of distinct point pairs.
///
/// Grid: a uniform lattice and its pairs (finite spaces: all unordered pairs).
/// UniformRandom: independent uniform pairs.
/// Hybrid (intervals): interleaves lattice pairs, uniform pairs and
/// near-diagonal probes (x, x + h) with h = width * 2^-j * (1 + u/2) anchored
/// at both endpoints and at random interior points. Suprema of distance ratios
/// of smooth maps are approached along the diagonal, often at an endpoint, so
/// the probes are what find them.
struct PairSampler {
    SampleStrategy strategy = SampleStrategy::Hybrid;
    std::size_t sample_count = 10000;
    std::uint64_t rng_seed = 0;
    /// Unbounded intervals are sampled on [lo, tail_cap].
    Real tail_cap = 1e6L;

    bool operator==(const PairSampler&) const = default;
};

struct PointPair {
    Point x = 0;
    Point y = 0;

    bool operator==(const PointPair&) const = default;
    auto operator<=>(const PointPair&) const = default;
};

/// Exactly `sample_count` pairs of distinct points (distance >= 1e-12).
/// Throws PreconditionError for sample_count == 0, a tail cap not above lo, or
/// a space with fewer than two distinct points.
std::vector<PointPair> sample_pairs(const MetricSpace& space, const PairSampler& sampler);

/// The sampled window [lo, hi] of an interval space, with hi replaced by the
/// tail cap when unbounded and open endpoints nudged inward by one ulp.
struct SampleWindow {
    Real lo = 0;
    Real hi = 0;
    bool truncated = false;
};
SampleWindow sample_window(const MetricSpace& space, const PairSampler& sampler);

std::string to_string(SampleStrategy strategy);
SampleStrategy parse_strategy(const std::string& text);

}  // namespace tcontract
