#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcontract/contraction.hpp"

namespace tcontract {

/// The Picard orbit x_n = S^n x0 with its T-images.
struct Orbit {
    Point x0 = 0;
    std::vector<Point> points;      // x_0 .. x_N
    std::vector<Point> t_images;    // T(x_n)
    std::vector<Real> residuals;    // d(x_{n+1}, x_n), one shorter than points
    std::vector<Real> t_residuals;  // d(Tx_{n+1}, Tx_n)
    /// k^n d(Tx0, TSx0) / (1 - k) per point; empty when k is unknown.
    std::vector<Real> bound_ledger;
};

enum class SolveStatus { Converged, NoConvergence, HypothesisFailure };

struct FixedPointResult {
    SolveStatus status = SolveStatus::NoConvergence;
    std::optional<Point> fixed_point;
    /// T(fixed_point): the limit of T S^n x0.
    std::optional<Point> t_anchor;
    /// d(S x, x) at the returned estimate (or at the last iterate).
    Real residual = 0;
    /// Bound on d(T x, T x*) in the T-image metric, present when k was supplied.
    std::optional<Real> certified_t_bound;
    std::size_t iterations = 0;
    std::vector<std::pair<std::string, std::string>> diagnostics;
    Orbit orbit;

    void note(std::string key, std::string value) {
        diagnostics.emplace_back(std::move(key), std::move(value));
    }
};

struct SolveOptions {
    std::optional<Real> k;
    Real tol = 1e-10L;
    std::size_t max_iter = 1000000;
    Real divergence_radius = 1e12L;
};

/// Smallest n with k^n d0 / (1 - k) <= tol; 0 when d0 == 0.
/// Throws ParameterError unless 0 < k < 1 and tol > 0.
std::size_t a_priori_iterations(Real k, Real d0, Real tol);

/// Exactly `steps` applications of S from x0 (steps + 1 points).
Orbit trace_orbit(const MetricSpace& space, const MappingPair& pair, Point x0, std::size_t steps,
                  std::optional<Real> k = std::nullopt);

/// Picard iteration. Stops at the first x_n with d(S x_n, x_n) <= tol and, when
/// k is supplied, k^n d(Tx0, TSx0) / (1 - k) <= tol; x_n is returned.
/// NoConvergence once |x_n| exceeds the divergence radius or max_iter is spent.
FixedPointResult picard_solve(const MetricSpace& space, const MappingPair& pair, Point x0,
                              const SolveOptions& options = {});

struct PhiProfile {
    std::vector<Point> grid;
    std::vector<Real> phi_values;  // d(TSy, Ty)
    Point argmin = 0;
    Real min_value = 0;
    /// Result of polishing the grid argmin by Picard iteration.
    std::optional<Point> polished_point;
    std::optional<Real> polished_value;
    /// Descent phi(S argmin) < phi(argmin) when phi(argmin) > tol.
    bool descent_checked = false;
    bool descent_holds = true;
};

Real phi(const MetricSpace& space, const MappingPair& pair, Point y);

/// Grid minimization of phi(y) = d(TSy, Ty) on a compact space, then Picard
/// polish from the argmin. Finite spaces use every point as the grid.
/// Throws PreconditionError on non-compact spaces or grid_size < 2.
std::pair<PhiProfile, FixedPointResult> phi_minimize(const MetricSpace& space,
                                                     const MappingPair& pair,
                                                     std::size_t grid_size,
                                                     const SolveOptions& options = {});

struct PowerTrickResult {
    FixedPointResult result;
    /// The n for which (T, S^n) was certified; 0 when none qualified.
    int power = 0;
    std::vector<ContractionReport> reports;  // one per power tried
    /// Finite spaces: every fixed point of S.
    std::optional<std::vector<Point>> finite_fixed_points;
    bool uniqueness_violated = false;
};

/// Finds the smallest n <= n_max with (T, S^n) a sampled T-contraction,
/// iterates S^n from x0 and checks the result is fixed by S itself.
PowerTrickResult power_trick_solve(const MetricSpace& space, const MappingPair& pair, int n_max,
                                   const PairSampler& sampler, Point x0,
                                   const SolveOptions& options = {});

std::string to_string(SolveStatus status);

}  // namespace tcontract
