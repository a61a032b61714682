#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcontract/metric_space.hpp"

namespace tcontract {

/// A self-map of {0, ..., n-1} given by its image table.
using FiniteMap = std::vector<std::uint8_t>;

/// Maps in enumeration order: index = sum table[i] * n^i.
FiniteMap finite_map_from_index(std::size_t index, std::size_t n);

struct FinitePairFacts {
    bool t_injective = false;
    /// max d(TSx,TSy)/d(Tx,Ty) over pairs with Tx != Ty; empty when T is constant.
    std::optional<Real> k_star;
    /// Strict inequality on every pair with Tx != Ty.
    bool t_contractive = false;
    std::vector<std::size_t> fixed_points;
    /// Every Picard orbit reaches the single fixed point.
    bool all_orbits_reach_fixed_point = false;
};

/// Exact facts about one (T, S) pair on a finite space.
FinitePairFacts analyze_finite_pair(const MetricSpace& space, const FiniteMap& t,
                                    const FiniteMap& s);

struct OrbitCycle {
    std::size_t tail_length = 0;  // steps before entering the cycle
    std::size_t period = 0;
    std::size_t entry = 0;        // first point on the cycle
};

/// Every orbit of a finite self-map is eventually periodic.
OrbitCycle orbit_cycle(const FiniteMap& s, std::size_t start);

enum class FailureMode { MultipleFixedPoints, NoFixedPoint };

struct TheoremViolation {
    FiniteMap t;
    FiniteMap s;
    std::string reason;
};

struct Counterexample {
    FiniteMap t;
    FiniteMap s;
    FailureMode mode;
    Real k_star = 0;
    std::vector<std::size_t> fixed_points;
};

struct OracleOptions {
    /// Collect the distribution of k* over hypothesis-satisfying pairs.
    bool k_threshold_scan = false;
    /// 0 = hardware concurrency.
    unsigned threads = 0;
    /// Stored counterexamples; the total is always counted.
    std::size_t counterexample_cap = 100000;
};

struct ExhaustiveRunReport {
    std::size_t space_size = 0;
    std::size_t pairs_checked = 0;
    /// Pairs with T injective and S a T-contraction (the first theorem's hypotheses).
    std::size_t contraction_hypothesis_pairs = 0;
    /// Pairs with T injective and S T-contractive (the compact-space theorem's hypotheses).
    std::size_t contractive_hypothesis_pairs = 0;
    /// Pairs with constant T, excluded because k* is vacuous.
    std::size_t vacuous_pairs = 0;
    std::vector<TheoremViolation> theorem_violations;
    std::vector<Counterexample> counterexamples_found;
    std::size_t counterexamples_total = 0;
    /// k* value -> count, when k_threshold_scan is on.
    std::map<Real, std::size_t> k_star_histogram;
};

/// Enumerates all (n^n)^2 pairs on a valid metric space with n <= 5.
/// Throws PreconditionError for n > 5 and StructuralError when the metric
/// axioms fail.
ExhaustiveRunReport enumerate_and_check(const MetricSpace& space, const OracleOptions& options = {});

struct EdelsteinVerdict {
    bool t_injective = false;
    bool t_contractive = false;
    bool hypotheses_hold = false;
    std::vector<std::size_t> fixed_points;
    bool all_orbits_reach_fixed_point = false;
    /// Hypotheses held but the conclusion failed.
    bool violation = false;
    std::string reason;
};

EdelsteinVerdict edelstein_check(const MetricSpace& space, const FiniteMap& t, const FiniteMap& s);

/// Random valid metric on n points: symmetric weights in [0.1, 1] closed under
/// shortest paths.
MetricSpace random_finite_metric(std::size_t n, std::uint64_t seed);

std::string to_string(FailureMode mode);
std::string describe_map(const FiniteMap& map, const MetricSpace& space);

}  // namespace tcontract
