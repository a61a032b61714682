#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcontract/contraction.hpp"
#include "tcontract/finite_oracle.hpp"
#include "tcontract/fixed_point.hpp"

namespace tcontract {

/// A node of the structured text report format:
///
///     contraction_report {
///       k_estimate = 0.5
///       witness_max {
///         x = 1
///         y = 2
///       }
///     }
///
/// Fields and children keep insertion order, so serialization is stable.
struct ReportNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<ReportNode> children;

    ReportNode& field(std::string key, std::string value);
    ReportNode& field(std::string key, Real value);
    ReportNode& field(std::string key, std::size_t value);
    ReportNode& field(std::string key, bool value);
    ReportNode& child(std::string child_name);

    std::optional<std::string> get(std::string_view key) const;
    const ReportNode* find(std::string_view child_name) const;

    bool operator==(const ReportNode&) const = default;
};

std::string serialize(const ReportNode& node);
/// Parses one top-level node; throws ConfigError on malformed text.
ReportNode parse_report(std::string_view text);

ReportNode to_report(const ContractionReport& report, const MetricSpace& space);
ReportNode to_report(const InjectivityVerdict& verdict, const MetricSpace& space);
ReportNode to_report(const ConvergenceProbeReport& report, const MetricSpace& space);
ReportNode to_report(const ContinuityEvidence& evidence, std::string_view map_name);
ReportNode to_report(const FixedPointResult& result, const MetricSpace& space);
ReportNode to_report(const PhiProfile& profile, const MetricSpace& space);
ReportNode to_report(const ExhaustiveRunReport& report, const MetricSpace& space);

/// Header: n,x,Tx,residual,t_residual,bound. The residual columns of row n
/// hold d(x_{n+1}, x_n) and are empty on the last row; bound is empty when k
/// was not supplied.
void write_orbit_csv(std::ostream& out, const Orbit& orbit, const MetricSpace& space);

}  // namespace tcontract
