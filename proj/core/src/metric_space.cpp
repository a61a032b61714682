#include "tcontract/metric_space.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tcontract {

MetricSpace MetricSpace::interval(IntervalBounds bounds, bool is_complete) {
    if (!std::isfinite(bounds.lo)) throw StructuralError("interval lower bound must be finite");
    if (std::isnan(bounds.hi) || bounds.lo > bounds.hi)
        throw StructuralError("interval requires lo <= hi");
    if (!bounds.bounded()) bounds.hi_open = true;
    if (bounds.lo == bounds.hi && (bounds.lo_open || bounds.hi_open))
        throw StructuralError("interval is empty");

    MetricSpace space;
    space.kind_ = SpaceKind::RealInterval;
    space.bounds_ = bounds;
    space.compact_ = bounds.bounded() && !bounds.lo_open && !bounds.hi_open;
    space.complete_ = is_complete;
    if (space.compact_ && !space.complete_)
        throw PreconditionError("a compact interval is complete; is_complete=false is inconsistent");
    return space;
}

MetricSpace MetricSpace::interval(Real lo, Real hi) {
    return interval(IntervalBounds{lo, hi, false, false});
}

MetricSpace MetricSpace::finite(std::vector<Real> matrix, std::vector<std::string> labels) {
    std::size_t n = 0;
    while (n * n < matrix.size()) ++n;
    if (n == 0 || n * n != matrix.size())
        throw StructuralError("distance matrix must be square and non-empty (got " +
                              std::to_string(matrix.size()) + " entries)");
    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    } else if (labels.size() != n) {
        throw StructuralError("label count " + std::to_string(labels.size()) +
                              " does not match matrix dimension " + std::to_string(n));
    }
    MetricSpace space;
    space.kind_ = SpaceKind::FinitePoints;
    space.size_ = n;
    space.matrix_ = std::move(matrix);
    space.labels_ = std::move(labels);
    space.complete_ = true;
    space.compact_ = true;
    return space;
}

bool MetricSpace::contains(Point p) const noexcept {
    if (std::isnan(p)) return false;
    if (is_finite()) {
        return p >= 0 && p < static_cast<Real>(size_) && std::floor(p) == p;
    }
    if (!std::isfinite(p)) return false;
    if (p < bounds_.lo || (bounds_.lo_open && p == bounds_.lo)) return false;
    if (p > bounds_.hi || (bounds_.hi_open && p == bounds_.hi)) return false;
    return true;
}

Real MetricSpace::distance(Point x, Point y) const {
    if (is_interval()) return std::fabs(x - y);
    return entry(index_of(x), index_of(y));
}

std::size_t MetricSpace::index_of(Point p) const {
    if (!is_finite() || !contains(p)) throw DomainError("not a point of the space: " + format_real(p), p);
    return static_cast<std::size_t>(p);
}

std::size_t MetricSpace::index_of_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw DomainError("unknown point label '" + std::string(label) + "'", -1);
}

std::string MetricSpace::describe(Point p) const {
    if (is_finite() && contains(p)) return labels_[static_cast<std::size_t>(p)];
    return format_real(p);
}

AxiomReport check_metric_axioms(const MetricSpace& space) {
    AxiomReport report;
    if (space.is_interval()) return report;

    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Real d = space.entry(i, j);
            if (!(d >= 0)) report.violations.push_back({AxiomKind::Negative, i, j, 0});
            if (i == j && d != 0) report.violations.push_back({AxiomKind::Identity, i, j, 0});
            if (i < j && d == 0) report.violations.push_back({AxiomKind::Identity, i, j, 0});
            if (i < j && space.entry(i, j) != space.entry(j, i))
                report.violations.push_back({AxiomKind::Symmetry, i, j, 0});
        }
    }
    // The matrix is symmetric when the triangle pass matters, so i < k suffices.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                if (space.entry(i, k) > space.entry(i, j) + space.entry(j, k) + kFiniteSlack)
                    report.violations.push_back({AxiomKind::Triangle, i, j, k});
            }
    return report;
}

std::string to_string(AxiomKind kind) {
    switch (kind) {
        case AxiomKind::NonSquare: return "non_square";
        case AxiomKind::Negative: return "negative";
        case AxiomKind::Identity: return "identity";
        case AxiomKind::Symmetry: return "symmetry";
        case AxiomKind::Triangle: return "triangle";
    }
    return "unknown";
}

std::string to_string(const AxiomViolation& v, const MetricSpace& space) {
    const auto& l = space.labels();
    std::ostringstream os;
    os << to_string(v.kind) << " (" << l[v.i] << ", " << l[v.j];
    if (v.kind == AxiomKind::Triangle) os << ", " << l[v.k];
    os << ")";
    return os.str();
}

MetricSpace parse_finite_space(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> labels;
    std::vector<Real> values;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        if (token == "labels" || token == "labels:") {
            if (!labels.empty() || !values.empty())
                throw ConfigError("'labels' must come first and only once", line_no, 1);
            while (ls >> token) labels.push_back(token);
            if (labels.empty()) throw ConfigError("'labels' line has no labels", line_no, 1);
            continue;
        }
        do {
            try {
                std::size_t used = 0;
                const Real v = std::stold(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                values.push_back(v);
            } catch (const std::exception&) {
                throw ConfigError("expected a real number, got '" + token + "'", line_no,
                                  static_cast<int>(line.find(token)) + 1);
            }
        } while (ls >> token);
    }
    if (!labels.empty() && values.size() != labels.size() * labels.size())
        throw StructuralError("expected " + std::to_string(labels.size() * labels.size()) +
                              " matrix entries for " + std::to_string(labels.size()) +
                              " labels, got " + std::to_string(values.size()));
    return MetricSpace::finite(std::move(values), std::move(labels));
}

MetricSpace load_finite_space(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open space file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_finite_space(buffer.str());
}

std::string format_real(Real value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    std::ostringstream os;
    os << std::setprecision(17) << value;
    return os.str();
}

std::string describe_space(const MetricSpace& space) {
    if (space.is_finite()) {
        std::string out = "finite {";
        for (std::size_t i = 0; i < space.size(); ++i) out += (i ? ", " : "") + space.labels()[i];
        return out + "}";
    }
    const auto& b = space.bounds();
    return std::string(b.lo_open ? "(" : "[") + format_real(b.lo) + ", " + format_real(b.hi) +
           (b.hi_open || std::isinf(b.hi) ? ")" : "]");
}

}  // namespace tcontract
