#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcontract/finite_oracle.hpp"
#include "tcontract/problem_config.hpp"
#include "tcontract/report.hpp"

namespace tcontract {

/// Exit codes shared by the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // inconclusive, no convergence, violations, mismatches
inline constexpr int kExitError = 2;     // configuration, domain or usage errors

struct AnalyzeOutcome {
    ContractionReport contraction;
    InjectivityVerdict injectivity;
    ContinuityEvidence t_continuity;
    ContinuityEvidence s_continuity;
    std::optional<ConvergenceProbeReport> probe;
    ReportNode report;
    int exit_code = kExitOk;
};

/// Classification, injectivity, continuity evidence and (when configured) the
/// subsequential probe. Exit 0 on any definitive verdict, 1 on Inconclusive.
AnalyzeOutcome cmd_analyze(const ProblemConfig& config);

struct SolveOutcome {
    FixedPointResult result;
    std::optional<PhiProfile> profile;
    std::optional<ConvergenceProbeReport> probe;
    ReportNode report;
    int exit_code = kExitOk;
};

/// Picard iteration, or phi minimization when `solver.use_phi` is set on a
/// compact space. Exit 0 iff Converged.
SolveOutcome cmd_solve(const ProblemConfig& config);

struct OracleOutcome {
    ExhaustiveRunReport run;
    std::string summary;
    ReportNode report;
    int exit_code = kExitOk;
};

/// Exhaustive theorem check on a finite space with at most `n_cap` (<= 5)
/// points. Exit 1 iff a theorem violation was found.
OracleOutcome cmd_oracle(const MetricSpace& space, std::size_t n_cap,
                         const OracleOptions& options = {});

struct GalleryEntryRun {
    std::string id;
    bool passed = true;
    std::vector<std::string> mismatches;
    ReportNode report;
};

struct GalleryOutcome {
    std::vector<GalleryEntryRun> entries;
    std::string text;
    int exit_code = kExitOk;
};

/// Runs one built-in entry (or "all") and compares it with its frozen
/// expectations. Throws ParameterError for an unknown id.
GalleryOutcome cmd_gallery(const std::string& id_or_all);

}  // namespace tcontract
