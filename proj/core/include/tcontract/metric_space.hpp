#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "tcontract/real.hpp"

namespace tcontract {

/// A point of a metric space. Interval spaces use the real coordinate; finite
/// spaces use the point index (an exact small integer).
using Point = Real;

enum class SpaceKind { RealInterval, FinitePoints };

struct IntervalBounds {
    Real lo = 0;
    Real hi = std::numeric_limits<Real>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    bool bounded() const noexcept { return hi != std::numeric_limits<Real>::infinity(); }
};

/// Either a real interval with d(x,y) = |x - y| or a finite set of labelled
/// points with an explicit distance matrix. Immutable after construction.
class MetricSpace {
  public:
    /// Throws StructuralError when lo > hi or lo is not finite, and
    /// PreconditionError when the declared flags are inconsistent.
    static MetricSpace interval(IntervalBounds bounds, bool is_complete = true);
    static MetricSpace interval(Real lo, Real hi);

    /// Row-major n x n matrix. Throws StructuralError when the matrix is not
    /// square or the label count does not match. Metric axioms are not
    /// enforced here; see check_metric_axioms.
    static MetricSpace finite(std::vector<Real> matrix, std::vector<std::string> labels = {});

    SpaceKind kind() const noexcept { return kind_; }
    bool is_interval() const noexcept { return kind_ == SpaceKind::RealInterval; }
    bool is_finite() const noexcept { return kind_ == SpaceKind::FinitePoints; }
    bool is_complete() const noexcept { return complete_; }
    bool is_compact() const noexcept { return compact_; }

    const IntervalBounds& bounds() const noexcept { return bounds_; }

    std::size_t size() const noexcept { return size_; }
    const std::vector<Real>& matrix() const noexcept { return matrix_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Real entry(std::size_t i, std::size_t j) const noexcept { return matrix_[i * size_ + j]; }

    bool contains(Point p) const noexcept;
    Real distance(Point x, Point y) const;

    /// Finite spaces: index of the point. Throws DomainError for non-members.
    std::size_t index_of(Point p) const;
    /// Finite spaces: index of the point carrying `label`.
    std::size_t index_of_label(std::string_view label) const;

    /// Human-readable rendering: the label on finite spaces, the number otherwise.
    std::string describe(Point p) const;

    bool operator==(const MetricSpace&) const = default;

  private:
    MetricSpace() = default;

    SpaceKind kind_ = SpaceKind::RealInterval;
    IntervalBounds bounds_;
    std::size_t size_ = 0;
    std::vector<Real> matrix_;
    std::vector<std::string> labels_;
    bool complete_ = true;
    bool compact_ = false;
};

enum class AxiomKind { NonSquare, Negative, Identity, Symmetry, Triangle };

struct AxiomViolation {
    AxiomKind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;  // triangle only: d(i,k) > d(i,j) + d(j,k)

    bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive metric-axiom check. Interval spaces always pass.
AxiomReport check_metric_axioms(const MetricSpace& space);

std::string to_string(AxiomKind kind);
std::string to_string(const AxiomViolation& v, const MetricSpace& space);

/// Finite-space text format:
///
///     # comment
///     labels 0 1/2 1
///     0   0.5 1
///     0.5 0   0.5
///     1   0.5 0
///
/// The `labels` line is optional (labels default to 0..n-1); when present it
/// fixes n. The matrix is n*n whitespace-separated reals in row-major order.
MetricSpace parse_finite_space(std::string_view text);
MetricSpace load_finite_space(const std::filesystem::path& path);

std::string format_real(Real value);

/// "[1, inf)", "(0, 1]" or "finite {0, 1/2, 1}".
std::string describe_space(const MetricSpace& space);

}  // namespace tcontract
