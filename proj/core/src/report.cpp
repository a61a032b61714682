#include "tcontract/report.hpp"

#include <sstream>

namespace tcontract {
namespace {

void serialize_into(std::ostringstream& os, const ReportNode& node, int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    os << indent << node.name << " {\n";
    for (const auto& [key, value] : node.fields) os << indent << "  " << key << " = " << value << "\n";
    for (const auto& child : node.children) serialize_into(os, child, depth + 1);
    os << indent << "}\n";
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

ReportNode& pair_node(ReportNode& parent, const std::string& name, const PointPair& p,
                      const MetricSpace& space) {
    return parent.child(name).field("x", space.describe(p.x)).field("y", space.describe(p.y));
}

std::string point_list(const std::vector<std::size_t>& points, const MetricSpace& space) {
    std::string out = "{";
    for (std::size_t i = 0; i < points.size(); ++i) out += (i ? ", " : "") + space.labels()[points[i]];
    return out + "}";
}

}  // namespace

ReportNode& ReportNode::field(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
}
ReportNode& ReportNode::field(std::string key, Real value) {
    return field(std::move(key), format_real(value));
}
ReportNode& ReportNode::field(std::string key, std::size_t value) {
    return field(std::move(key), std::to_string(value));
}
ReportNode& ReportNode::field(std::string key, bool value) {
    return field(std::move(key), std::string(value ? "true" : "false"));
}
ReportNode& ReportNode::child(std::string child_name) {
    children.push_back(ReportNode{std::move(child_name), {}, {}});
    return children.back();
}

std::optional<std::string> ReportNode::get(std::string_view key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return v;
    return std::nullopt;
}

const ReportNode* ReportNode::find(std::string_view child_name) const {
    for (const auto& c : children)
        if (c.name == child_name) return &c;
    return nullptr;
}

std::string serialize(const ReportNode& node) {
    std::ostringstream os;
    serialize_into(os, node, 0);
    return os.str();
}

ReportNode parse_report(std::string_view text) {
    std::vector<ReportNode> stack;
    std::optional<ReportNode> root;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (root) throw ConfigError("content after the top-level node", line_no, 1);
        if (line == "}") {
            if (stack.empty()) throw ConfigError("unbalanced '}'", line_no, 1);
            ReportNode done = std::move(stack.back());
            stack.pop_back();
            if (stack.empty())
                root = std::move(done);
            else
                stack.back().children.push_back(std::move(done));
        } else if (line.size() >= 2 && line.ends_with(" {")) {
            stack.push_back(ReportNode{trim(line.substr(0, line.size() - 2)), {}, {}});
        } else if (const auto eq = line.find(" = "); eq != std::string::npos && !stack.empty()) {
            stack.back().field(trim(line.substr(0, eq)), line.substr(eq + 3));
        } else if (line.ends_with(" =") && !stack.empty()) {
            stack.back().field(trim(line.substr(0, line.size() - 2)), std::string());
        } else {
            throw ConfigError("expected 'name {', 'key = value' or '}'", line_no, 1);
        }
    }
    if (!root) throw ConfigError("unterminated report", line_no, 1);
    return *root;
}

ReportNode to_report(const ContractionReport& report, const MetricSpace& space) {
    ReportNode node{"contraction_report", {}, {}};
    node.field("verdict", to_string(report.verdict));
    if (report.verdict == Verdict::TContraction) node.field("verdict_k", report.verdict_k);
    node.field("k_estimate", report.k_estimate)
        .field("usable_pairs", report.usable_pairs)
        .field("skipped_pairs", report.skipped_pairs)
        .field("unresolved_pairs", report.unresolved_pairs)
        .field("truncated", report.truncated);
    if (report.witness_max) pair_node(node, "witness_max", *report.witness_max, space);
    if (report.violation_witness)
        pair_node(node, "violation_witness", *report.violation_witness, space)
            .field("ratio", report.violation_ratio);
    node.child("sampler")
        .field("strategy", to_string(report.sample_meta.strategy))
        .field("sample_count", report.sample_meta.sample_count)
        .field("seed", static_cast<std::size_t>(report.sample_meta.rng_seed))
        .field("tail_cap", report.sample_meta.tail_cap);
    return node;
}

ReportNode to_report(const InjectivityVerdict& verdict, const MetricSpace& space) {
    ReportNode node{"injectivity", {}, {}};
    node.field("verdict", std::string(verdict.collision ? "CollisionWitness" : "NoCollisionFound"))
        .field("exhaustive", verdict.exhaustive);
    if (verdict.witness) pair_node(node, "witness", *verdict.witness, space);
    return node;
}

ReportNode to_report(const ConvergenceProbeReport& report, const MetricSpace& space) {
    ReportNode node{"subsequential_probe", {}, {}};
    node.field("verdict", to_string(report.verdict))
        .field("t_image_converged", report.t_image_converged)
        .field("preimage_bounded", report.preimage_bounded)
        .field("tail_diameter", report.tail_diameter)
        .field("preimage_spread", report.preimage_spread);
    if (!report.escape_witness.empty()) {
        std::string terms;
        for (std::size_t i = 0; i < report.escape_witness.size(); ++i)
            terms += (i ? " " : "") + space.describe(report.escape_witness[i]);
        node.child("escape_witness")
            .field("escape_index", report.escape_index)
            .field("terms", terms);
    }
    return node;
}

ReportNode to_report(const ContinuityEvidence& evidence, std::string_view map_name) {
    ReportNode node{"continuity", {}, {}};
    node.field("map", std::string(map_name))
        .field("consistent_with_continuity", evidence.consistent_with_continuity);
    if (!evidence.oscillation.empty()) node.field("finest_oscillation", evidence.oscillation.back());
    return node;
}

ReportNode to_report(const FixedPointResult& result, const MetricSpace& space) {
    ReportNode node{"fixed_point_result", {}, {}};
    node.field("status", to_string(result.status));
    if (result.fixed_point) node.field("fixed_point", space.describe(*result.fixed_point));
    if (result.t_anchor) node.field("t_anchor", space.describe(*result.t_anchor));
    node.field("residual", result.residual);
    if (result.certified_t_bound) node.field("certified_t_bound", *result.certified_t_bound);
    node.field("iterations", result.iterations);
    if (!result.orbit.points.empty()) {
        auto& orbit = node.child("orbit");
        orbit.field("x0", space.describe(result.orbit.x0))
            .field("length", result.orbit.points.size())
            .field("last", space.describe(result.orbit.points.back()));
    }
    if (!result.diagnostics.empty()) {
        auto& diag = node.child("diagnostics");
        for (const auto& [k, v] : result.diagnostics) diag.field(k, v);
    }
    return node;
}

ReportNode to_report(const PhiProfile& profile, const MetricSpace& space) {
    ReportNode node{"phi_profile", {}, {}};
    node.field("grid_size", profile.grid.size())
        .field("argmin", space.describe(profile.argmin))
        .field("min_value", profile.min_value);
    std::vector<std::size_t> zeros;
    if (space.is_finite()) {
        for (std::size_t i = 0; i < profile.phi_values.size(); ++i)
            if (profile.phi_values[i] <= kFiniteSlack) zeros.push_back(i);
        node.field("zeros", point_list(zeros, space));
    }
    if (profile.descent_checked) node.field("descent_holds", profile.descent_holds);
    if (profile.polished_point) node.field("polished_point", space.describe(*profile.polished_point));
    if (profile.polished_value) node.field("polished_value", *profile.polished_value);
    return node;
}

ReportNode to_report(const ExhaustiveRunReport& report, const MetricSpace& space) {
    ReportNode node{"exhaustive_run", {}, {}};
    node.field("space_size", report.space_size)
        .field("pairs_checked", report.pairs_checked)
        .field("contraction_hypothesis_pairs", report.contraction_hypothesis_pairs)
        .field("contractive_hypothesis_pairs", report.contractive_hypothesis_pairs)
        .field("vacuous_pairs", report.vacuous_pairs)
        .field("theorem_violations", report.theorem_violations.size())
        .field("counterexamples", report.counterexamples_total);
    for (const auto& v : report.theorem_violations)
        node.child("violation")
            .field("T", describe_map(v.t, space))
            .field("S", describe_map(v.s, space))
            .field("reason", v.reason);
    for (const auto& c : report.counterexamples_found)
        node.child("counterexample")
            .field("T", describe_map(c.t, space))
            .field("S", describe_map(c.s, space))
            .field("mode", to_string(c.mode))
            .field("k_star", c.k_star)
            .field("fixed_points", point_list(c.fixed_points, space));
    if (!report.k_star_histogram.empty()) {
        auto& hist = node.child("k_star_histogram");
        for (const auto& [k, count] : report.k_star_histogram) hist.field(format_real(k), count);
    }
    return node;
}

void write_orbit_csv(std::ostream& out, const Orbit& orbit, const MetricSpace& space) {
    out << "n,x,Tx,residual,t_residual,bound\n";
    for (std::size_t n = 0; n < orbit.points.size(); ++n) {
        out << n << ',' << space.describe(orbit.points[n]) << ',' << space.describe(orbit.t_images[n])
            << ',';
        if (n < orbit.residuals.size()) out << format_real(orbit.residuals[n]);
        out << ',';
        if (n < orbit.t_residuals.size()) out << format_real(orbit.t_residuals[n]);
        out << ',';
        if (n < orbit.bound_ledger.size()) out << format_real(orbit.bound_ledger[n]);
        out << '\n';
    }
}

}  // namespace tcontract
