#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcontract/contraction.hpp"
#include "tcontract/finite_oracle.hpp"
#include "tcontract/fixed_point.hpp"
#include "tcontract/problem_config.hpp"

namespace tcontract {

/// Frozen expectations for a gallery entry. Unset fields are not compared.
struct GalleryExpectation {
    std::optional<Verdict> verdict;
    std::optional<std::pair<Real, Real>> k_range;  // closed range for k_estimate
    std::optional<bool> collision;
    std::optional<SubsequentialVerdict> probe;
    std::optional<SolveStatus> status;
    std::optional<Real> fixed_point;
    Real fixed_point_tol = 1e-10L;
    // Finite entries.
    std::optional<Real> k_star;
    std::optional<std::vector<std::string>> fixed_points;
    std::optional<std::vector<std::string>> phi_zeros;
    std::optional<FailureMode> failure_mode;
};

struct GalleryEntry {
    std::string id;
    std::string title;
    std::string config_text;
    GalleryExpectation expected;
};

/// ex2_2, ex3_1, ex3_2, ex3_3, ex3_4, note2_a, note2_b, banach_identity,
/// edelstein_sqrt, in that order.
const std::vector<GalleryEntry>& gallery_entries();

/// Throws ParameterError for an unknown id.
const GalleryEntry& gallery_entry(std::string_view id);

ProblemConfig gallery_config(const GalleryEntry& entry);

/// The three-point space {0, 1/2, 1} with d(x, y) = |x - y|.
MetricSpace note2_space();

/// Image table of a map on a finite space.
FiniteMap tabulate(const MetricSpace& space, const SelfMap& map);

}  // namespace tcontract
