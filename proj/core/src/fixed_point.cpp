#include "tcontract/fixed_point.hpp"

#include <cmath>

namespace tcontract {
namespace {

void check_k(const std::optional<Real>& k) {
    if (k && !(*k > 0 && *k < 1)) throw ParameterError("modulus k must lie in (0, 1)");
}

Real cauchy_bound(Real k, std::size_t n, Real d0) {
    return std::pow(k, static_cast<Real>(n)) * d0 / (1 - k);
}

void fill_ledger(Orbit& orbit, const std::optional<Real>& k) {
    orbit.bound_ledger.clear();
    if (!k || orbit.t_residuals.empty()) return;
    const Real d0 = orbit.t_residuals.front();
    for (std::size_t n = 0; n < orbit.points.size(); ++n)
        orbit.bound_ledger.push_back(cauchy_bound(*k, n, d0));
}

void require_start(const MetricSpace& space, Point x0) {
    if (!space.contains(x0))
        throw DomainError("start point " + format_real(x0) + " is outside the domain", x0);
}

}  // namespace

std::size_t a_priori_iterations(Real k, Real d0, Real tol) {
    if (!(k > 0 && k < 1)) throw ParameterError("a priori bound needs 0 < k < 1");
    if (!(tol > 0)) throw ParameterError("tolerance must be positive");
    if (!(d0 >= 0)) throw ParameterError("d0 must be non-negative");
    if (d0 == 0) return 0;

    // Start a little below the logarithmic estimate and walk up exactly.
    const Real estimate = std::log(tol * (1 - k) / d0) / std::log(k);
    std::size_t n = estimate > 2 ? static_cast<std::size_t>(estimate) - 2 : 0;
    while (n > 0 && cauchy_bound(k, n - 1, d0) <= tol) --n;
    while (cauchy_bound(k, n, d0) > tol) ++n;
    return n;
}

Orbit trace_orbit(const MetricSpace& space, const MappingPair& pair, Point x0, std::size_t steps,
                  std::optional<Real> k) {
    check_k(k);
    require_start(space, x0);
    Orbit orbit;
    orbit.x0 = x0;
    orbit.points.reserve(steps + 1);
    orbit.points.push_back(x0);
    orbit.t_images.push_back(pair.t.apply(space, x0));
    for (std::size_t n = 0; n < steps; ++n) {
        const Point next = pair.s.apply(space, orbit.points.back());
        const Point t_next = pair.t.apply(space, next);
        orbit.residuals.push_back(space.distance(next, orbit.points.back()));
        orbit.t_residuals.push_back(space.distance(t_next, orbit.t_images.back()));
        orbit.points.push_back(next);
        orbit.t_images.push_back(t_next);
    }
    fill_ledger(orbit, k);
    return orbit;
}

FixedPointResult picard_solve(const MetricSpace& space, const MappingPair& pair, Point x0,
                              const SolveOptions& options) {
    check_k(options.k);
    if (!(options.tol > 0)) throw ParameterError("tolerance must be positive");
    require_start(space, x0);

    FixedPointResult result;
    Orbit& orbit = result.orbit;
    orbit.x0 = x0;
    orbit.points.push_back(x0);
    orbit.t_images.push_back(pair.t.apply(space, x0));

    Real d0 = 0;
    for (std::size_t n = 0; n < options.max_iter; ++n) {
        const Point x = orbit.points.back();
        const Point next = pair.s.apply(space, x);
        const Point t_next = pair.t.apply(space, next);
        const Real residual = space.distance(next, x);
        const Real t_residual = space.distance(t_next, orbit.t_images.back());
        if (n == 0) d0 = t_residual;

        const bool residual_ok = residual <= options.tol;
        const std::optional<Real> bound =
            options.k ? std::optional<Real>(cauchy_bound(*options.k, n, d0)) : std::nullopt;
        if (residual_ok && (!bound || *bound <= options.tol)) {
            result.status = SolveStatus::Converged;
            result.fixed_point = x;
            result.t_anchor = orbit.t_images.back();
            result.residual = residual;
            result.certified_t_bound = bound;
            result.iterations = n;
            fill_ledger(orbit, options.k);
            return result;
        }

        orbit.residuals.push_back(residual);
        orbit.t_residuals.push_back(t_residual);
        orbit.points.push_back(next);
        orbit.t_images.push_back(t_next);
        result.residual = residual;
        result.iterations = n + 1;

        if (space.is_interval() && std::fabs(next) > options.divergence_radius) {
            result.note("escape", "iterate " + std::to_string(n + 1) + " = " + format_real(next) +
                                      " exceeds divergence radius " +
                                      format_real(options.divergence_radius));
            break;
        }
    }
    if (result.diagnostics.empty())
        result.note("stagnation", "tolerance not met within " + std::to_string(options.max_iter) +
                                      " iterations");
    result.status = SolveStatus::NoConvergence;
    fill_ledger(orbit, options.k);
    return result;
}

Real phi(const MetricSpace& space, const MappingPair& pair, Point y) {
    const Point sy = pair.s.apply(space, y);
    return space.distance(pair.t.apply(space, sy), pair.t.apply(space, y));
}

std::pair<PhiProfile, FixedPointResult> phi_minimize(const MetricSpace& space,
                                                     const MappingPair& pair,
                                                     std::size_t grid_size,
                                                     const SolveOptions& options) {
    if (!space.is_compact()) throw PreconditionError("phi minimization requires a compact space");

    PhiProfile profile;
    if (space.is_finite()) {
        for (std::size_t i = 0; i < space.size(); ++i) profile.grid.push_back(static_cast<Real>(i));
    } else {
        if (grid_size < 2) throw PreconditionError("grid_size must be >= 2");
        const auto& b = space.bounds();
        for (std::size_t i = 0; i < grid_size; ++i)
            profile.grid.push_back(i + 1 == grid_size
                                       ? b.hi
                                       : b.lo + (b.hi - b.lo) * static_cast<Real>(i) /
                                                    static_cast<Real>(grid_size - 1));
    }

    profile.phi_values.reserve(profile.grid.size());
    for (std::size_t i = 0; i < profile.grid.size(); ++i) {
        const Real v = phi(space, pair, profile.grid[i]);
        profile.phi_values.push_back(v);
        if (i == 0 || v < profile.min_value) {
            profile.min_value = v;
            profile.argmin = profile.grid[i];
        }
    }

    FixedPointResult result;
    if (profile.min_value > options.tol) {
        profile.descent_checked = true;
        const Real next = phi(space, pair, pair.s.apply(space, profile.argmin));
        profile.descent_holds = next < profile.min_value;
        if (!profile.descent_holds) {
            result.status = SolveStatus::HypothesisFailure;
            result.residual = space.distance(pair.s.apply(space, profile.argmin), profile.argmin);
            result.note("descent", "phi(S argmin) = " + format_real(next) +
                                       " is not below phi(argmin) = " +
                                       format_real(profile.min_value) +
                                       "; S is not T-contractive");
            return {std::move(profile), std::move(result)};
        }
    }

    result = picard_solve(space, pair, profile.argmin, options);
    result.note("start", "grid argmin " + space.describe(profile.argmin));
    if (result.fixed_point) {
        profile.polished_point = result.fixed_point;
        profile.polished_value = phi(space, pair, *result.fixed_point);
    }
    return {std::move(profile), std::move(result)};
}

PowerTrickResult power_trick_solve(const MetricSpace& space, const MappingPair& pair, int n_max,
                                   const PairSampler& sampler, Point x0,
                                   const SolveOptions& options) {
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
    PowerTrickResult out;

    for (int n = 1; n <= n_max; ++n) {
        auto report = estimate_modulus(space, MappingPair{pair.t, pair.s.power(n)}, sampler);
        const bool certified = report.verdict == Verdict::TContraction;
        out.reports.push_back(std::move(report));
        if (certified) {
            out.power = n;
            break;
        }
    }

    if (space.is_finite()) {
        std::vector<Point> fixed;
        for (std::size_t i = 0; i < space.size(); ++i) {
            const Point p = static_cast<Real>(i);
            if (pair.s.apply(space, p) == p) fixed.push_back(p);
        }
        out.uniqueness_violated = fixed.size() != 1;
        out.finite_fixed_points = std::move(fixed);
    }

    if (out.power == 0) {
        out.result.status = SolveStatus::HypothesisFailure;
        out.result.note("power", "no n <= " + std::to_string(n_max) +
                                     " makes S^n a T-contraction on the samples");
        return out;
    }

    SolveOptions inner = options;
    const Real k = out.reports.back().k_estimate;
    inner.k = k > 0 ? std::optional<Real>(k) : std::nullopt;
    out.result = picard_solve(space, MappingPair{pair.t, pair.s.power(out.power)}, x0, inner);
    out.result.note("power", std::to_string(out.power));
    out.result.note("modulus_source", "sampled");

    if (out.result.status == SolveStatus::Converged) {
        const Point x = *out.result.fixed_point;
        const Real residual = space.distance(pair.s.apply(space, x), x);
        out.result.residual = residual;
        if (residual > options.tol) {
            out.result.status = SolveStatus::HypothesisFailure;
            out.result.note("transfer", "fixed point of S^" + std::to_string(out.power) +
                                            " is not fixed by S (residual " +
                                            format_real(residual) + ")");
        }
    }
    if (out.uniqueness_violated)
        out.result.note("uniqueness", "S has " + std::to_string(out.finite_fixed_points->size()) +
                                          " fixed points on the finite space");
    return out;
}

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::NoConvergence: return "NoConvergence";
        case SolveStatus::HypothesisFailure: return "HypothesisFailure";
    }
    return "unknown";
}

}  // namespace tcontract
