#include "tcontract/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tcontract/gallery.hpp"

namespace tcontract {
namespace {

std::optional<ConvergenceProbeReport> run_probe(const ProblemConfig& config) {
    if (!config.probe) return std::nullopt;
    const auto sequence = config.probe->generate();
    return probe_subsequential_convergence(config.space, config.maps.t, sequence);
}

ReportNode problem_header(const ProblemConfig& config, std::string node_name) {
    ReportNode node{std::move(node_name), {}, {}};
    node.field("problem", config.name);
    node.field("space", describe_space(config.space));
    node.field("T", config.t_text);
    node.field("S", config.s_text);
    return node;
}

std::vector<std::string> labels_of(const MetricSpace& space, const std::vector<std::size_t>& points) {
    std::vector<std::string> out;
    for (std::size_t p : points) out.push_back(space.describe(static_cast<Point>(p)));
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out + "}";
}

ReportNode finite_facts_report(const FinitePairFacts& facts, const MetricSpace& space) {
    ReportNode node{"finite_pair", {}, {}};
    node.field("t_injective", facts.t_injective);
    node.field("k_star", facts.k_star ? format_real(*facts.k_star) : std::string("none"));
    node.field("t_contractive", facts.t_contractive);
    node.field("fixed_points", join(labels_of(space, facts.fixed_points)));
    node.field("all_orbits_reach_fixed_point", facts.all_orbits_reach_fixed_point);
    return node;
}

std::vector<std::string> phi_zero_labels(const PhiProfile& profile, const MetricSpace& space) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < profile.grid.size(); ++i)
        if (profile.phi_values[i] <= kDistinctTolerance) out.push_back(space.describe(profile.grid[i]));
    return out;
}

class Comparison {
  public:
    template <class T>
    void equal(const char* what, const T& expected, const T& actual) {
        if (!(expected == actual)) mismatch(what, show(expected), show(actual));
    }

    void within(const char* what, Real lo, Real hi, Real actual) {
        if (!(actual >= lo && actual <= hi))
            mismatch(what, "[" + format_real(lo) + ", " + format_real(hi) + "]", format_real(actual));
    }

    void near(const char* what, Real expected, Real tol, std::optional<Real> actual) {
        if (!actual || !(std::abs(*actual - expected) <= tol))
            mismatch(what, format_real(expected) + " +- " + format_real(tol),
                     actual ? format_real(*actual) : std::string("none"));
    }

    std::vector<std::string> take() { return std::move(mismatches_); }

  private:
    void mismatch(const char* what, const std::string& expected, const std::string& actual) {
        mismatches_.push_back(std::string(what) + ": expected " + expected + ", got " + actual);
    }

    static std::string show(const std::string& s) { return s; }
    static std::string show(bool b) { return b ? "true" : "false"; }
    static std::string show(Real r) { return format_real(r); }
    static std::string show(Verdict v) { return to_string(v); }
    static std::string show(SubsequentialVerdict v) { return to_string(v); }
    static std::string show(SolveStatus s) { return to_string(s); }
    static std::string show(FailureMode m) { return to_string(m); }
    static std::string show(const std::vector<std::string>& v) { return join(v); }

    std::vector<std::string> mismatches_;
};

GalleryEntryRun run_entry(const GalleryEntry& entry) {
    const ProblemConfig config = gallery_config(entry);
    const GalleryExpectation& want = entry.expected;
    Comparison cmp;

    AnalyzeOutcome analysis = cmd_analyze(config);
    SolveOutcome solve = cmd_solve(config);

    if (want.verdict) cmp.equal("verdict", *want.verdict, analysis.contraction.verdict);
    if (want.k_range)
        cmp.within("k_estimate", want.k_range->first, want.k_range->second,
                   analysis.contraction.k_estimate);
    if (want.collision) cmp.equal("collision", *want.collision, analysis.injectivity.collision);
    if (want.probe) {
        const auto& probe = analysis.probe ? analysis.probe : solve.probe;
        if (!probe)
            cmp.equal("probe", to_string(*want.probe), std::string("none"));
        else
            cmp.equal("probe", *want.probe, probe->verdict);
    }
    if (want.status) cmp.equal("status", *want.status, solve.result.status);
    if (want.fixed_point)
        cmp.near("fixed_point", *want.fixed_point, want.fixed_point_tol, solve.result.fixed_point);

    if (config.space.is_finite()) {
        const auto facts = analyze_finite_pair(config.space, tabulate(config.space, config.maps.t),
                                               tabulate(config.space, config.maps.s));
        if (want.k_star) cmp.near("k_star", *want.k_star, kFiniteSlack, facts.k_star);
        if (want.fixed_points)
            cmp.equal("fixed_points", *want.fixed_points, labels_of(config.space, facts.fixed_points));
        if (want.phi_zeros) {
            const auto zeros = solve.profile ? phi_zero_labels(*solve.profile, config.space)
                                             : std::vector<std::string>{};
            cmp.equal("phi_zeros", *want.phi_zeros, zeros);
        }
        if (want.failure_mode) {
            if (facts.fixed_points.size() == 1)
                cmp.equal("failure_mode", to_string(*want.failure_mode), std::string("none"));
            else
                cmp.equal("failure_mode", *want.failure_mode,
                          facts.fixed_points.empty() ? FailureMode::NoFixedPoint
                                                     : FailureMode::MultipleFixedPoints);
        }
    }

    GalleryEntryRun run;
    run.id = entry.id;
    run.mismatches = cmp.take();
    run.passed = run.mismatches.empty();
    run.report = ReportNode{"gallery_entry", {}, {}};
    run.report.field("id", entry.id);
    run.report.field("title", entry.title);
    run.report.field("result", std::string(run.passed ? "PASS" : "FAIL"));
    for (std::size_t i = 0; i < run.mismatches.size(); ++i)
        run.report.field("mismatch_" + std::to_string(i + 1), run.mismatches[i]);
    run.report.children.push_back(analysis.report);
    run.report.children.push_back(solve.report);
    return run;
}

}  // namespace

AnalyzeOutcome cmd_analyze(const ProblemConfig& config) {
    AnalyzeOutcome out;
    out.contraction = estimate_modulus(config.space, config.maps, config.sampler);
    out.injectivity = check_injectivity(config.space, config.maps.t, config.sampler);
    out.t_continuity = probe_continuity(config.space, config.maps.t, config.sampler);
    out.s_continuity = probe_continuity(config.space, config.maps.s, config.sampler);
    out.probe = run_probe(config);

    out.report = problem_header(config, "analysis");
    out.report.children.push_back(to_report(out.contraction, config.space));
    out.report.children.push_back(to_report(out.injectivity, config.space));
    out.report.children.push_back(to_report(out.t_continuity, "T"));
    out.report.children.push_back(to_report(out.s_continuity, "S"));
    if (out.probe) out.report.children.push_back(to_report(*out.probe, config.space));
    if (config.space.is_finite()) {
        const auto facts = analyze_finite_pair(config.space, tabulate(config.space, config.maps.t),
                                               tabulate(config.space, config.maps.s));
        out.report.children.push_back(finite_facts_report(facts, config.space));
    }
    out.exit_code = out.contraction.verdict == Verdict::Inconclusive ? kExitNegative : kExitOk;
    return out;
}

SolveOutcome cmd_solve(const ProblemConfig& config) {
    SolveOutcome out;
    const SolveOptions options = config.solver.solve_options();
    if (config.solver.use_phi) {
        auto [profile, result] = phi_minimize(config.space, config.maps, config.solver.grid, options);
        out.profile = std::move(profile);
        out.result = std::move(result);
    } else {
        out.result = picard_solve(config.space, config.maps, config.start_point(), options);
    }
    if (out.result.status != SolveStatus::Converged) out.probe = run_probe(config);

    out.report = problem_header(config, "solve");
    out.report.field("method", std::string(config.solver.use_phi ? "phi" : "picard"));
    out.report.children.push_back(to_report(out.result, config.space));
    if (out.profile) out.report.children.push_back(to_report(*out.profile, config.space));
    if (out.probe) out.report.children.push_back(to_report(*out.probe, config.space));
    out.exit_code = out.result.status == SolveStatus::Converged ? kExitOk : kExitNegative;
    return out;
}

OracleOutcome cmd_oracle(const MetricSpace& space, std::size_t n_cap, const OracleOptions& options) {
    if (!space.is_finite()) throw PreconditionError("oracle requires a finite space");
    if (n_cap > 5) throw ParameterError("n_cap must be at most 5");
    if (space.size() > n_cap)
        throw PreconditionError("space has " + std::to_string(space.size()) +
                                " points, above the cap of " + std::to_string(n_cap));
    OracleOutcome out;
    out.run = enumerate_and_check(space, options);
    std::ostringstream summary;
    summary << "pairs_checked=" << out.run.pairs_checked
            << " theorem_violations=" << out.run.theorem_violations.size()
            << " counterexamples=" << out.run.counterexamples_total;
    out.summary = summary.str();
    out.report = to_report(out.run, space);
    out.exit_code = out.run.theorem_violations.empty() ? kExitOk : kExitNegative;
    return out;
}

GalleryOutcome cmd_gallery(const std::string& id_or_all) {
    std::vector<const GalleryEntry*> selected;
    if (id_or_all == "all") {
        for (const auto& e : gallery_entries()) selected.push_back(&e);
    } else {
        selected.push_back(&gallery_entry(id_or_all));
    }

    GalleryOutcome out;
    std::ostringstream text;
    std::size_t passed = 0;
    for (const GalleryEntry* entry : selected) {
        GalleryEntryRun run = run_entry(*entry);
        text << serialize(run.report);
        if (run.passed) ++passed;
        out.entries.push_back(std::move(run));
    }
    for (const auto& run : out.entries) {
        text << (run.passed ? "PASS " : "FAIL ") << run.id << '\n';
        for (const auto& m : run.mismatches) text << "  " << m << '\n';
    }
    text << "gallery: " << passed << '/' << out.entries.size() << " passed\n";
    out.text = text.str();
    out.exit_code = passed == out.entries.size() ? kExitOk : kExitNegative;
    return out;
}

}  // namespace tcontract
