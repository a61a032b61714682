#include "tcontract/finite_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace tcontract {
namespace {

struct Shard {
    std::size_t contraction_hypothesis_pairs = 0;
    std::size_t contractive_hypothesis_pairs = 0;
    std::size_t vacuous_pairs = 0;
    std::size_t counterexamples_total = 0;
    std::vector<TheoremViolation> violations;
    std::vector<Counterexample> counterexamples;
    std::map<Real, std::size_t> histogram;
};

std::size_t power_of(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

bool orbits_reach(const FiniteMap& s, std::size_t target) {
    const std::size_t n = s.size();
    for (std::size_t start = 0; start < n; ++start) {
        std::size_t x = start;
        for (std::size_t step = 0; step < n; ++step) x = s[x];
        if (x != target) return false;
    }
    return true;
}

// Strict d(TSx,TSy) < d(Tx,Ty) on all pairs with Tx != Ty, checked by
// difference rather than through k*.
bool strictly_contractive(const MetricSpace& space, const FiniteMap& t, const FiniteMap& s) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (t[i] == t[j]) continue;
            const Real dt = space.entry(t[i], t[j]);
            const Real dts = space.entry(t[s[i]], t[s[j]]);
            if (!(dts < dt - kFiniteSlack)) return false;
        }
    return true;
}

std::string list_points(const std::vector<std::size_t>& points, const MetricSpace& space) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < points.size(); ++i) os << (i ? ", " : "") << space.labels()[points[i]];
    os << "}";
    return os.str();
}

void check_pair(const MetricSpace& space, const FiniteMap& t, const FiniteMap& s,
                const OracleOptions& options, Shard& shard) {
    const auto facts = analyze_finite_pair(space, t, s);
    if (!facts.k_star && space.size() >= 2) {
        ++shard.vacuous_pairs;
        return;
    }
    const bool contraction = !facts.k_star || *facts.k_star < 1 - kFiniteSlack;
    const bool unique_and_attracting =
        facts.fixed_points.size() == 1 && facts.all_orbits_reach_fixed_point;

    if (facts.t_injective && contraction) {
        ++shard.contraction_hypothesis_pairs;
        if (options.k_threshold_scan) ++shard.histogram[facts.k_star.value_or(0)];
        if (!unique_and_attracting)
            shard.violations.push_back(
                {t, s, "T-contraction with injective T but fixed points " +
                           list_points(facts.fixed_points, space) +
                           (facts.all_orbits_reach_fixed_point ? "" : ", orbits do not all converge")});
    }

    const auto edelstein = edelstein_check(space, t, s);
    if (edelstein.hypotheses_hold) ++shard.contractive_hypothesis_pairs;
    if (edelstein.violation) shard.violations.push_back({t, s, edelstein.reason});

    if (!facts.t_injective && contraction && facts.fixed_points.size() != 1) {
        ++shard.counterexamples_total;
        if (shard.counterexamples.size() < options.counterexample_cap)
            shard.counterexamples.push_back({t, s,
                                             facts.fixed_points.empty()
                                                 ? FailureMode::NoFixedPoint
                                                 : FailureMode::MultipleFixedPoints,
                                             facts.k_star.value_or(0), facts.fixed_points});
    }
}

}  // namespace

FiniteMap finite_map_from_index(std::size_t index, std::size_t n) {
    FiniteMap map(n);
    for (std::size_t i = 0; i < n; ++i) {
        map[i] = static_cast<std::uint8_t>(index % n);
        index /= n;
    }
    return map;
}

FinitePairFacts analyze_finite_pair(const MetricSpace& space, const FiniteMap& t,
                                    const FiniteMap& s) {
    const std::size_t n = t.size();
    FinitePairFacts facts;
    facts.t_injective = true;
    for (std::size_t i = 0; i < n && facts.t_injective; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (t[i] == t[j]) {
                facts.t_injective = false;
                break;
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (t[i] == t[j]) continue;
            const Real ratio = space.entry(t[s[i]], t[s[j]]) / space.entry(t[i], t[j]);
            if (!facts.k_star || ratio > *facts.k_star) facts.k_star = ratio;
        }
    facts.t_contractive = !facts.k_star || *facts.k_star < 1 - kFiniteSlack;

    for (std::size_t i = 0; i < n; ++i)
        if (s[i] == i) facts.fixed_points.push_back(i);
    facts.all_orbits_reach_fixed_point =
        facts.fixed_points.size() == 1 && orbits_reach(s, facts.fixed_points.front());
    return facts;
}

OrbitCycle orbit_cycle(const FiniteMap& s, std::size_t start) {
    std::vector<std::size_t> first_seen(s.size(), static_cast<std::size_t>(-1));
    std::size_t x = start;
    for (std::size_t step = 0;; ++step) {
        if (first_seen[x] != static_cast<std::size_t>(-1))
            return {first_seen[x], step - first_seen[x], x};
        first_seen[x] = step;
        x = s[x];
    }
}

EdelsteinVerdict edelstein_check(const MetricSpace& space, const FiniteMap& t, const FiniteMap& s) {
    EdelsteinVerdict v;
    const std::size_t n = t.size();
    v.t_injective = true;
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (hit[t[i]]) v.t_injective = false;
        hit[t[i]] = true;
    }
    v.t_contractive = strictly_contractive(space, t, s);
    v.hypotheses_hold = v.t_injective && v.t_contractive;

    for (std::size_t i = 0; i < n; ++i)
        if (s[i] == i) v.fixed_points.push_back(i);
    v.all_orbits_reach_fixed_point = v.fixed_points.size() == 1;
    if (v.all_orbits_reach_fixed_point) {
        const std::size_t fp = v.fixed_points.front();
        for (std::size_t start = 0; start < n; ++start) {
            const auto cycle = orbit_cycle(s, start);
            if (cycle.period != 1 || cycle.entry != fp) v.all_orbits_reach_fixed_point = false;
        }
    }

    if (v.hypotheses_hold && !(v.fixed_points.size() == 1 && v.all_orbits_reach_fixed_point)) {
        v.violation = true;
        v.reason = "T-contractive with injective T but fixed points " +
                   list_points(v.fixed_points, space) +
                   (v.all_orbits_reach_fixed_point ? "" : ", orbits do not all converge");
    }
    return v;
}

ExhaustiveRunReport enumerate_and_check(const MetricSpace& space, const OracleOptions& options) {
    if (!space.is_finite()) throw PreconditionError("exhaustive check needs a finite space");
    const std::size_t n = space.size();
    if (n > 5) throw PreconditionError("exhaustive check is capped at 5 points (got " +
                                       std::to_string(n) + ")");
    const auto axioms = check_metric_axioms(space);
    if (!axioms.ok())
        throw StructuralError("space fails the metric axioms: " +
                              to_string(axioms.violations.front(), space));

    const std::size_t map_count = power_of(n, n);
    std::vector<FiniteMap> maps;
    maps.reserve(map_count);
    for (std::size_t i = 0; i < map_count; ++i) maps.push_back(finite_map_from_index(i, n));

    std::vector<Shard> shards(map_count);
    unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(map_count));

    auto run = [&](unsigned worker) {
        for (std::size_t ti = worker; ti < map_count; ti += workers)
            for (std::size_t si = 0; si < map_count; ++si)
                check_pair(space, maps[ti], maps[si], options, shards[ti]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    ExhaustiveRunReport report;
    report.space_size = n;
    report.pairs_checked = map_count * map_count;
    for (auto& shard : shards) {
        report.contraction_hypothesis_pairs += shard.contraction_hypothesis_pairs;
        report.contractive_hypothesis_pairs += shard.contractive_hypothesis_pairs;
        report.vacuous_pairs += shard.vacuous_pairs;
        report.counterexamples_total += shard.counterexamples_total;
        for (auto& v : shard.violations) report.theorem_violations.push_back(std::move(v));
        for (auto& c : shard.counterexamples) {
            if (report.counterexamples_found.size() >= options.counterexample_cap) break;
            report.counterexamples_found.push_back(std::move(c));
        }
        for (const auto& [k, count] : shard.histogram) report.k_star_histogram[k] += count;
    }
    return report;
}

MetricSpace random_finite_metric(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<Real> d(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Real w = 0.1L + 0.9L * std::ldexp(static_cast<Real>(engine()), -64);
            d[i * n + j] = d[j * n + i] = w;
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    return MetricSpace::finite(std::move(d));
}

std::string to_string(FailureMode mode) {
    return mode == FailureMode::NoFixedPoint ? "NoFixedPoint" : "MultipleFixedPoints";
}

std::string describe_map(const FiniteMap& map, const MetricSpace& space) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < map.size(); ++i) os << (i ? " " : "") << space.labels()[map[i]];
    os << "]";
    return os.str();
}

}  // namespace tcontract
