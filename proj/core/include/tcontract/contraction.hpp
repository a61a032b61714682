#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcontract/sampler.hpp"
#include "tcontract/self_map.hpp"

namespace tcontract {

enum class Verdict { TContraction, TContractive, NotTContractive, Inconclusive };

enum class RatioStatus {
    Usable,
    Collapsed,   // d(Tx, Ty) < 1e-12: T identifies the pair, no ratio
    Unresolved,  // the ratio's rounding uncertainty exceeds the resolution
};

struct RatioSample {
    PointPair pair;
    Real t_distance = 0;   // d(Tx, Ty)
    Real ts_distance = 0;  // d(TSx, TSy)
    Real ratio = 0;
    RatioStatus status = RatioStatus::Usable;
};

struct ModulusOptions {
    /// TContraction requires k_estimate <= 1 - margin.
    Real margin = 1e-6L;
    /// Largest accepted rounding uncertainty of a single ratio.
    Real ratio_resolution = 1e-12L;
};

struct ContractionReport {
    Real k_estimate = 0;
    Verdict verdict = Verdict::Inconclusive;
    /// Meaningful for TContraction only; equals k_estimate.
    Real verdict_k = 0;
    std::optional<PointPair> witness_max;
    std::optional<PointPair> violation_witness;
    Real violation_ratio = 0;
    std::size_t usable_pairs = 0;
    std::size_t skipped_pairs = 0;
    std::size_t unresolved_pairs = 0;
    /// The sample window was cut at tail_cap; k_estimate is a lower bound there.
    bool truncated = false;
    PairSampler sample_meta;

    bool operator==(const ContractionReport&) const = default;
};

/// Ratios d(TSx,TSy)/d(Tx,Ty) for the given pairs, in order.
///
/// On interval spaces each ratio carries a rounding-uncertainty estimate of
/// 2 eps (|TSx| + |TSy| + r (|Tx| + |Ty|)) / d(Tx,Ty) with magnitudes floored
/// at 1; ratios above `ratio_resolution` are marked Unresolved. Finite-space
/// distances are matrix entries and always resolved.
std::vector<RatioSample> compute_ratios(const MetricSpace& space, const MappingPair& pair,
                                        std::span<const PointPair> pairs,
                                        const ModulusOptions& options = {});

/// Max-reduction over usable ratios with lexicographic tie-break on the pair.
ContractionReport summarize_ratios(std::span<const RatioSample> ratios, const PairSampler& meta,
                                   bool truncated, const ModulusOptions& options = {});

ContractionReport estimate_modulus(const MetricSpace& space, const MappingPair& pair,
                                   const PairSampler& sampler, const ModulusOptions& options = {});

/// estimate_modulus with T = identity.
ContractionReport check_classical_contraction(const MetricSpace& space, const SelfMap& s,
                                              const PairSampler& sampler,
                                              const ModulusOptions& options = {});

struct InjectivityVerdict {
    bool collision = false;
    std::optional<PointPair> witness;
    /// Finite spaces are checked exhaustively; interval results are evidence.
    bool exhaustive = false;
};

/// A collision is a pair of distinct points with d(Tx,Ty) < 1e-12. On
/// intervals only globally spread pairs are used (Hybrid falls back to
/// UniformRandom): near-diagonal probes sit as close as 1e-12 and would
/// register every map of slope below one as colliding.
InjectivityVerdict check_injectivity(const MetricSpace& space, const SelfMap& t,
                                     const PairSampler& sampler);

enum class SubsequentialVerdict {
    ConsistentWithSubsequential,
    EvidenceAgainstSubsequential,
    Inconclusive,
};

struct ProbeOptions {
    std::size_t tail_length = 10;
    Real tail_tolerance = 1e-8L;
    Real window = 1e6L;
};

struct ConvergenceProbeReport {
    bool t_image_converged = false;
    bool preimage_bounded = false;
    SubsequentialVerdict verdict = SubsequentialVerdict::Inconclusive;
    Real tail_diameter = 0;
    Real preimage_spread = 0;
    /// First terms of the sequence followed by the first term leaving the window.
    std::vector<Point> escape_witness;
    std::size_t escape_index = 0;
};

/// Tests one supplied sequence against subsequential convergence of T.
/// Requires at least 10 terms, all in the domain.
ConvergenceProbeReport probe_subsequential_convergence(const MetricSpace& space, const SelfMap& t,
                                                       std::span<const Point> sequence,
                                                       const ProbeOptions& options = {});

struct ContinuityEvidence {
    /// Max |f(x_{i+1}) - f(x_i)| on lattices of 2^level + 1 points.
    std::vector<Real> oscillation;
    bool consistent_with_continuity = true;
};

/// Finite-difference oscillation on a refining lattice. Finite spaces are
/// discrete, so every map is continuous there.
ContinuityEvidence probe_continuity(const MetricSpace& space, const SelfMap& f,
                                    const PairSampler& sampler, int levels = 12);

std::string to_string(Verdict verdict);
std::string to_string(SubsequentialVerdict verdict);

}  // namespace tcontract
