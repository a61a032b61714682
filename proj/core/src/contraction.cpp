#include "tcontract/contraction.hpp"

#include <algorithm>
#include <cmath>

namespace tcontract {
namespace {

Real magnitude(Real v) { return std::max<Real>(std::fabs(v), 1); }

}  // namespace

std::vector<RatioSample> compute_ratios(const MetricSpace& space, const MappingPair& pair,
                                        std::span<const PointPair> pairs,
                                        const ModulusOptions& options) {
    std::vector<RatioSample> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) {
        const Point tx = pair.t.apply(space, p.x);
        const Point ty = pair.t.apply(space, p.y);
        const Point tsx = pair.t.apply(space, pair.s.apply(space, p.x));
        const Point tsy = pair.t.apply(space, pair.s.apply(space, p.y));

        RatioSample r;
        r.pair = p;
        r.t_distance = space.distance(tx, ty);
        r.ts_distance = space.distance(tsx, tsy);
        if (r.t_distance < kDistinctTolerance) {
            r.status = RatioStatus::Collapsed;
        } else {
            r.ratio = r.ts_distance / r.t_distance;
            if (space.is_interval()) {
                const Real noise = 2 * kEpsilon *
                                   (magnitude(tsx) + magnitude(tsy) +
                                    r.ratio * (magnitude(tx) + magnitude(ty))) /
                                   r.t_distance;
                if (noise > options.ratio_resolution) r.status = RatioStatus::Unresolved;
            }
        }
        out.push_back(r);
    }
    return out;
}

ContractionReport summarize_ratios(std::span<const RatioSample> ratios, const PairSampler& meta,
                                   bool truncated, const ModulusOptions& options) {
    ContractionReport report;
    report.sample_meta = meta;
    report.truncated = truncated;

    for (const auto& r : ratios) {
        switch (r.status) {
            case RatioStatus::Collapsed: ++report.skipped_pairs; continue;
            case RatioStatus::Unresolved: ++report.unresolved_pairs; continue;
            case RatioStatus::Usable: break;
        }
        ++report.usable_pairs;
        if (!report.witness_max || r.ratio > report.k_estimate ||
            (r.ratio == report.k_estimate && r.pair < *report.witness_max)) {
            report.k_estimate = r.ratio;
            report.witness_max = r.pair;
        }
    }

    if (report.usable_pairs == 0) {
        report.verdict = Verdict::Inconclusive;
    } else if (report.k_estimate >= 1) {
        report.verdict = Verdict::NotTContractive;
        report.violation_witness = report.witness_max;
        report.violation_ratio = report.k_estimate;
    } else if (report.k_estimate <= 1 - options.margin) {
        report.verdict = Verdict::TContraction;
        report.verdict_k = report.k_estimate;
    } else {
        report.verdict = Verdict::TContractive;
    }
    return report;
}

ContractionReport estimate_modulus(const MetricSpace& space, const MappingPair& pair,
                                   const PairSampler& sampler, const ModulusOptions& options) {
    const auto pairs = sample_pairs(space, sampler);
    const auto ratios = compute_ratios(space, pair, pairs, options);
    const bool truncated = space.is_interval() && !space.bounds().bounded();
    return summarize_ratios(ratios, sampler, truncated, options);
}

ContractionReport check_classical_contraction(const MetricSpace& space, const SelfMap& s,
                                              const PairSampler& sampler,
                                              const ModulusOptions& options) {
    return estimate_modulus(space, MappingPair::classical(s), sampler, options);
}

InjectivityVerdict check_injectivity(const MetricSpace& space, const SelfMap& t,
                                     const PairSampler& sampler) {
    InjectivityVerdict verdict;
    if (space.is_finite()) {
        verdict.exhaustive = true;
        const std::size_t n = space.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point ti = t.apply(space, static_cast<Real>(i));
            for (std::size_t j = i + 1; j < n; ++j) {
                const Point tj = t.apply(space, static_cast<Real>(j));
                if (space.distance(ti, tj) < kDistinctTolerance) {
                    verdict.collision = true;
                    verdict.witness = PointPair{static_cast<Real>(i), static_cast<Real>(j)};
                    return verdict;
                }
            }
        }
        return verdict;
    }

    PairSampler global = sampler;
    if (global.strategy == SampleStrategy::Hybrid) global.strategy = SampleStrategy::UniformRandom;
    for (const auto& p : sample_pairs(space, global)) {
        const Real d = space.distance(t.apply(space, p.x), t.apply(space, p.y));
        if (d < kDistinctTolerance) {
            verdict.collision = true;
            verdict.witness = p;
            return verdict;
        }
    }
    return verdict;
}

ConvergenceProbeReport probe_subsequential_convergence(const MetricSpace& space, const SelfMap& t,
                                                       std::span<const Point> sequence,
                                                       const ProbeOptions& options) {
    if (sequence.size() < 10) throw PreconditionError("probe sequence needs at least 10 terms");

    ConvergenceProbeReport report;
    const std::size_t n = sequence.size();
    const std::size_t tail = std::min(std::max<std::size_t>(options.tail_length, 2), n);

    Real lo = sequence[0], hi = sequence[0];
    bool escaped = false;
    Real tail_lo = 0, tail_hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point y = sequence[i];
        if (!space.contains(y))
            throw DomainError("probe sequence leaves the domain at term " + std::to_string(i + 1), y);
        const Point ty = t.apply(space, y);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
        if (!escaped && space.is_interval() && hi - lo > options.window) {
            escaped = true;
            report.escape_index = i;
        }
        if (i + tail >= n) {
            // Tail diameter in the T-image; real-valued on both space kinds
            // because finite spaces are compact and short-circuit below.
            if (i + tail == n) tail_lo = tail_hi = ty;
            tail_lo = std::min(tail_lo, ty);
            tail_hi = std::max(tail_hi, ty);
        }
    }
    report.preimage_spread = hi - lo;
    report.preimage_bounded = !escaped;

    if (space.is_finite()) {
        // Diameter in the metric rather than in index order.
        Real diameter = 0;
        for (std::size_t i = n - tail; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                diameter = std::max(diameter, space.distance(t.apply(space, sequence[i]),
                                                             t.apply(space, sequence[j])));
        report.tail_diameter = diameter;
    } else {
        report.tail_diameter = tail_hi - tail_lo;
    }
    report.t_image_converged = report.tail_diameter < options.tail_tolerance;

    if (space.is_compact()) {
        report.verdict = SubsequentialVerdict::ConsistentWithSubsequential;
    } else if (report.t_image_converged && !report.preimage_bounded) {
        report.verdict = SubsequentialVerdict::EvidenceAgainstSubsequential;
        const std::size_t prefix = std::min<std::size_t>(5, report.escape_index);
        report.escape_witness.assign(sequence.begin(), sequence.begin() + prefix);
        report.escape_witness.push_back(sequence[report.escape_index]);
    } else if (report.t_image_converged) {
        report.verdict = SubsequentialVerdict::ConsistentWithSubsequential;
    } else {
        report.verdict = SubsequentialVerdict::Inconclusive;
    }
    return report;
}

ContinuityEvidence probe_continuity(const MetricSpace& space, const SelfMap& f,
                                    const PairSampler& sampler, int levels) {
    ContinuityEvidence evidence;
    if (space.is_finite()) return evidence;

    const auto window = sample_window(space, sampler);
    for (int level = 4; level <= levels; ++level) {
        const std::size_t m = (std::size_t{1} << level) + 1;
        Real worst = 0;
        Real prev = f.apply(space, window.lo);
        for (std::size_t i = 1; i < m; ++i) {
            const Real x = i + 1 == m ? window.hi
                                      : window.lo + (window.hi - window.lo) * static_cast<Real>(i) /
                                                        static_cast<Real>(m - 1);
            const Real cur = f.apply(space, x);
            worst = std::max(worst, std::fabs(cur - prev));
            prev = cur;
        }
        evidence.oscillation.push_back(worst);
    }
    const auto& osc = evidence.oscillation;
    if (osc.size() >= 3) {
        const Real last = osc.back();
        evidence.consistent_with_continuity = last <= 1e-9L || last <= 0.9L * osc[osc.size() - 3];
    }
    return evidence;
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::TContraction: return "TContraction";
        case Verdict::TContractive: return "TContractive";
        case Verdict::NotTContractive: return "NotTContractive";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

std::string to_string(SubsequentialVerdict verdict) {
    switch (verdict) {
        case SubsequentialVerdict::ConsistentWithSubsequential: return "ConsistentWithSubsequential";
        case SubsequentialVerdict::EvidenceAgainstSubsequential: return "EvidenceAgainstSubsequential";
        case SubsequentialVerdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

}  // namespace tcontract
