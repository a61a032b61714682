#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "tcontract/fixed_point.hpp"

using namespace tcontract;

namespace {

const Real kInf = std::numeric_limits<Real>::infinity();

MappingPair log_pair() {
    return {oracle::map("T", [](Real x) { return std::log(x) + 1; }),
            oracle::map("S", [](Real x) { return 2 * std::sqrt(x); })};
}

MappingPair circle_pair() {
    return {oracle::map("T", [](Real x) { return x * x; }),
            oracle::map("S", [](Real x) { return std::sqrt(1 - x * x) / 2; })};
}

MappingPair square_pair() {
    return {oracle::map("T", [](Real x) { return x * x; }),
            oracle::map("S", [](Real x) { return x * x / std::sqrt(Real{2}); })};
}

// Smallest n with k^n d0 / (1 - k) <= tol by direct multiplication.
std::size_t direct_iterations(Real k, Real d0, Real tol) {
    if (d0 == 0) return 0;
    Real b = d0 / (1 - k);
    std::size_t n = 0;
    while (b > tol) {
        b *= k;
        ++n;
    }
    return n;
}

}  // namespace

TEST(APriori, MatchesDirectLoop) {
    EXPECT_EQ(a_priori_iterations(0.5L, 1, 1e-6L), 21u);
    EXPECT_EQ(a_priori_iterations(0.5L, 0, 1e-6L), 0u);
    EXPECT_EQ(a_priori_iterations(0.25L, 3, 1), 1u);
    for (Real k : {0.1L, 0.5L, 0.9L, 0.999L})
        for (Real d0 : {1e-3L, 1.0L, 1e4L})
            for (Real tol : {1e-12L, 1e-6L, 1e-1L})
                EXPECT_EQ(a_priori_iterations(k, d0, tol), direct_iterations(k, d0, tol))
                    << "k=" << static_cast<double>(k) << " d0=" << static_cast<double>(d0);
}

TEST(APriori, RejectsBadParameters) {
    EXPECT_THROW(a_priori_iterations(1, 1, 1e-6L), ParameterError);
    EXPECT_THROW(a_priori_iterations(0, 1, 1e-6L), ParameterError);
    EXPECT_THROW(a_priori_iterations(0.5L, 1, 0), ParameterError);
}

TEST(Picard, LogPairReachesFour) {
    const auto space = MetricSpace::interval(1, kInf);
    const Real want = oracle::bisect([](Real x) { return 2 * std::sqrt(x) - x; }, 2, 10);
    SolveOptions options;
    options.k = 0.5L;
    options.tol = 1e-12L;
    const auto result = picard_solve(space, log_pair(), 1, options);
    ASSERT_EQ(result.status, SolveStatus::Converged);
    EXPECT_NEAR(static_cast<double>(*result.fixed_point), static_cast<double>(want), 1e-10);
    ASSERT_TRUE(result.certified_t_bound.has_value());
    EXPECT_LE(*result.certified_t_bound, options.tol);
    EXPECT_LE(std::fabs(*result.t_anchor - (std::log(want) + 1)), *result.certified_t_bound + 1e-15L);
}

TEST(Picard, CirclePairReachesInverseRootFive) {
    const auto space = MetricSpace::interval(0, 1);
    const Real want = oracle::bisect([](Real x) { return std::sqrt(1 - x * x) / 2 - x; }, 0, 1);
    SolveOptions options;
    options.k = 0.25L;
    const auto result = picard_solve(space, circle_pair(), 0, options);
    ASSERT_EQ(result.status, SolveStatus::Converged);
    EXPECT_NEAR(static_cast<double>(*result.fixed_point), static_cast<double>(want), 1e-10);
}

TEST(Picard, CertificateStopsNoEarlierThanAPriori) {
    const auto space = MetricSpace::interval(0, 1);
    SolveOptions options;
    options.k = 0.5L;
    const auto result = picard_solve(space, MappingPair::classical(oracle::map("S", [](Real x) { return x / 2; })),
                                     1, options);
    ASSERT_EQ(result.status, SolveStatus::Converged);
    EXPECT_EQ(result.iterations, a_priori_iterations(0.5L, 0.5L, options.tol));
}

TEST(Picard, EscapeAndStagnation) {
    const auto half_line = MetricSpace::interval(0, kInf);
    const MappingPair doubling{oracle::map("T", [](Real x) { return std::exp(-x); }),
                               oracle::map("S", [](Real x) { return 2 * x + 1; })};
    const auto escaped = picard_solve(half_line, doubling, 0, {});
    EXPECT_EQ(escaped.status, SolveStatus::NoConvergence);
    ASSERT_FALSE(escaped.diagnostics.empty());
    EXPECT_EQ(escaped.diagnostics.front().first, "escape");
    EXPECT_LT(escaped.iterations, 60u);

    const auto unit = MetricSpace::interval(0, 1);
    SolveOptions few;
    few.max_iter = 10;
    const auto flip = picard_solve(unit, MappingPair::classical(oracle::map("S", [](Real x) { return 1 - x; })), 0, few);
    EXPECT_EQ(flip.status, SolveStatus::NoConvergence);
    EXPECT_EQ(flip.diagnostics.front().first, "stagnation");
    EXPECT_EQ(flip.iterations, 10u);
}

TEST(Picard, PreconditionsAndDomain) {
    const auto unit = MetricSpace::interval(0, 1);
    const auto pair = circle_pair();
    SolveOptions bad_k;
    bad_k.k = 1;
    EXPECT_THROW(picard_solve(unit, pair, 0, bad_k), ParameterError);
    SolveOptions bad_tol;
    bad_tol.tol = 0;
    EXPECT_THROW(picard_solve(unit, pair, 0, bad_tol), ParameterError);
    EXPECT_THROW(picard_solve(unit, pair, 2, {}), DomainError);
}

TEST(Orbit, CauchyBoundHoldsPairwise) {
    const auto space = MetricSpace::interval(1, kInf);
    const Real k = 0.5L;
    const auto orbit = trace_orbit(space, log_pair(), 1, 60, k);
    ASSERT_EQ(orbit.points.size(), 61u);
    ASSERT_EQ(orbit.bound_ledger.size(), 61u);
    const Real d0 = orbit.t_residuals.front();
    for (std::size_t n = 0; n < orbit.points.size(); ++n)
        for (std::size_t m = n + 1; m < orbit.points.size(); ++m) {
            const Real bound = (std::pow(k, Real(n)) + std::pow(k, Real(m))) / (1 - k) * d0;
            EXPECT_LE(std::fabs(orbit.t_images[n] - orbit.t_images[m]), bound);
        }
}

TEST(Orbit, TailBoundCoversDistanceToLimit) {
    const auto space = MetricSpace::interval(1, kInf);
    const auto orbit = trace_orbit(space, log_pair(), 1, 60, 0.5L);
    const Real t_star = std::log(Real{4}) + 1;
    for (std::size_t n = 0; n < orbit.points.size(); ++n)
        EXPECT_LE(std::fabs(orbit.t_images[n] - t_star), orbit.bound_ledger[n] + 1e-15L);
}

TEST(Orbit, DistanceToFixedImageIsNonIncreasing) {
    const auto unit = MetricSpace::interval(0, 1);
    const struct {
        MappingPair pair;
        Point x0;
        Real fixed;
    } cases[] = {{square_pair(), 0.9L, 0}, {circle_pair(), 0, 1 / std::sqrt(Real{5})}};
    for (const auto& c : cases) {
        const auto orbit = trace_orbit(unit, c.pair, c.x0, 80);
        const Real t_star = c.pair.t(c.fixed);
        for (std::size_t n = 1; n < orbit.points.size(); ++n)
            EXPECT_LE(std::fabs(orbit.t_images[n] - t_star),
                      std::fabs(orbit.t_images[n - 1] - t_star) + 1e-12L);
    }
}

TEST(Phi, GridArgminThenPolish) {
    const auto unit = MetricSpace::interval(0, 1);
    const Real want = oracle::bisect([](Real x) { return std::sqrt(1 - x * x) / 2 - x; }, 0, 1);
    auto [profile, result] = phi_minimize(unit, circle_pair(), 10001);
    EXPECT_EQ(profile.grid.size(), 10001u);
    EXPECT_LE(std::fabs(profile.argmin - want), 2e-4L);
    ASSERT_EQ(result.status, SolveStatus::Converged);
    ASSERT_TRUE(profile.polished_point.has_value());
    EXPECT_LE(std::fabs(*profile.polished_point - want), 1e-10L);
    EXPECT_LE(*profile.polished_value, 1e-8L);
}

TEST(Phi, DescentFailureIsHypothesisFailure) {
    // S = 1 - x: phi(y) = |1 - 2y| has its zero at 1/2, off the grid {0, 1},
    // and phi(S y) = phi(y) so there is no descent.
    const auto unit = MetricSpace::interval(0, 1);
    auto [profile, result] =
        phi_minimize(unit, MappingPair::classical(oracle::map("S", [](Real x) { return 1 - x; })), 2);
    EXPECT_TRUE(profile.descent_checked);
    EXPECT_FALSE(profile.descent_holds);
    EXPECT_EQ(result.status, SolveStatus::HypothesisFailure);
}

TEST(Phi, RequiresCompactSpace) {
    EXPECT_THROW(phi_minimize(MetricSpace::interval(1, kInf), log_pair(), 100), PreconditionError);
    EXPECT_THROW(phi_minimize(MetricSpace::interval(0, 1), circle_pair(), 1), PreconditionError);
}

// Derivative scan: sup |S'| = 1 at x = 1 for S = 2 sqrt x, while
// (S o S)(x) = 2^{3/2} x^{1/4} has sup derivative 2^{3/2}/4 < 1.
TEST(PowerTrick, SecondPowerIsFirstContraction) {
    auto sup_derivative = [](auto f) {
        Real worst = 0;
        for (int i = 0; i <= 100000; ++i) {
            const Real x = 1 + i * 1e-3L;
            const Real h = 1e-7L;
            worst = std::max(worst, std::fabs(f(x + h) - f(x)) / h);
        }
        return worst;
    };
    auto s = [](Real x) { return 2 * std::sqrt(x); };
    EXPECT_GT(sup_derivative(s), 0.999L);
    EXPECT_LT(sup_derivative([&](Real x) { return s(s(x)); }), 0.71L);

    const auto space = MetricSpace::interval(1, kInf);
    const auto out = power_trick_solve(space, MappingPair::classical(oracle::map("S", s)), 4, {}, 1, {});
    EXPECT_EQ(out.power, 2);
    ASSERT_EQ(out.reports.size(), 2u);
    EXPECT_NE(out.reports[0].verdict, Verdict::TContraction);
    ASSERT_EQ(out.result.status, SolveStatus::Converged);
    EXPECT_NEAR(static_cast<double>(*out.result.fixed_point), 4.0, 1e-9);
}

TEST(PowerTrick, FiniteSpaceListsFixedPoints) {
    const auto space = MetricSpace::finite({0, 1, 2, 1, 0, 1, 2, 1, 0});
    const auto out = power_trick_solve(space, MappingPair::classical(SelfMap::table("S", {1, 1, 1})), 2,
                                       {SampleStrategy::Grid, 3, 0}, 0, {});
    EXPECT_EQ(out.power, 1);
    ASSERT_TRUE(out.finite_fixed_points.has_value());
    EXPECT_EQ(*out.finite_fixed_points, std::vector<Point>{1});
    EXPECT_FALSE(out.uniqueness_violated);
    EXPECT_EQ(out.result.status, SolveStatus::Converged);
}

TEST(PowerTrick, NoCertifiedPower) {
    const auto unit = MetricSpace::interval(0, 1);
    const auto out = power_trick_solve(unit, MappingPair::classical(SelfMap::identity()), 3, {}, 0.5L, {});
    EXPECT_EQ(out.power, 0);
    EXPECT_EQ(out.result.status, SolveStatus::HypothesisFailure);
}

TEST(Orbit, TwoPointBoundHolds) {
    const auto space = MetricSpace::interval(1, kInf);
    const auto pair = log_pair();
    const Real k = 0.5L;
    const auto orbit = trace_orbit(space, pair, 1, 40, k);
    for (std::size_t i = 0; i + 1 < orbit.points.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < orbit.points.size(); ++j) {
            const Real lhs = std::fabs(orbit.t_images[i] - orbit.t_images[j]);
            const Real rhs = (orbit.t_residuals[i] + orbit.t_residuals[j]) / (1 - k);
            EXPECT_LE(lhs, rhs + 1e-15L) << i << "," << j;
        }
}

TEST(Orbit, TResidualsDecayGeometrically) {
    const struct {
        MappingPair pair;
        MetricSpace space;
        Point x0;
        Real k;
    } cases[] = {{log_pair(), MetricSpace::interval(1, kInf), 1, 0.5L},
                 {circle_pair(), MetricSpace::interval(0, 1), 0, 0.25L}};
    for (const auto& c : cases) {
        const auto orbit = trace_orbit(c.space, c.pair, c.x0, 50, c.k);
        for (std::size_t n = 1; n < orbit.t_residuals.size(); ++n)
            EXPECT_LE(orbit.t_residuals[n], c.k * orbit.t_residuals[n - 1] + 1e-10L);
    }
}

TEST(Picard, ConvergedPointIsFixedOnReevaluation) {
    const auto space = MetricSpace::interval(0, 1);
    for (Point x0 : {0.0L, 0.3L, 1.0L}) {
        const auto r = picard_solve(space, circle_pair(), x0, {});
        ASSERT_EQ(r.status, SolveStatus::Converged);
        const Point x = *r.fixed_point;
        EXPECT_LE(std::fabs(std::sqrt(1 - x * x) / 2 - x), 1e-10L);
        EXPECT_FALSE(r.certified_t_bound.has_value());
    }
}

TEST(PowerTrick, FirstPowerReducesToPicard) {
    const auto space = MetricSpace::interval(0, 1);
    const auto pair = circle_pair();
    const auto out = power_trick_solve(space, pair, 1, {}, 0, {});
    ASSERT_EQ(out.power, 1);
    SolveOptions options;
    options.k = out.reports.front().k_estimate;
    const auto direct = picard_solve(space, pair, 0, options);
    EXPECT_EQ(out.result.status, direct.status);
    EXPECT_EQ(out.result.fixed_point, direct.fixed_point);
    EXPECT_EQ(out.result.iterations, direct.iterations);
}

TEST(PowerTrick, Note2FirstPairFlagsNonUniqueness) {
    const auto space = MetricSpace::finite({0, 0.5L, 1, 0.5L, 0, 0.5L, 1, 0.5L, 0}, {"0", "1/2", "1"});
    const MappingPair pair{SelfMap::table("T", {0, 1, 0}), SelfMap::table("S", {0, 0, 2})};
    const auto out = power_trick_solve(space, pair, 3, {SampleStrategy::Grid, 3, 0}, 1, {});
    EXPECT_EQ(out.power, 1);
    EXPECT_TRUE(out.uniqueness_violated);
    ASSERT_TRUE(out.finite_fixed_points.has_value());
    EXPECT_EQ(*out.finite_fixed_points, (std::vector<Point>{0, 2}));
    EXPECT_EQ(out.result.status, SolveStatus::Converged);
    EXPECT_EQ(out.result.fixed_point, Point{0});
}
