#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "tcontract/metric_space.hpp"

using namespace tcontract;

TEST(MetricSpace, IntervalDistanceAndMembership) {
    const auto space = MetricSpace::interval(1, std::numeric_limits<Real>::infinity());
    EXPECT_EQ(space.distance(1, 4), 3);
    EXPECT_EQ(space.distance(4, 1), 3);
    EXPECT_TRUE(space.contains(1));
    EXPECT_FALSE(space.contains(0.5L));
    EXPECT_TRUE(space.is_complete());
    EXPECT_FALSE(space.is_compact());
    EXPECT_TRUE(MetricSpace::interval(0, 1).is_compact());
}

TEST(MetricSpace, OpenEndpointsAreExcluded) {
    IntervalBounds b;
    b.lo = 0;
    b.hi = 1;
    b.lo_open = true;
    const auto space = MetricSpace::interval(b, false);
    EXPECT_FALSE(space.contains(0));
    EXPECT_TRUE(space.contains(1));
    EXPECT_FALSE(space.is_compact());
}

TEST(MetricSpace, RejectsReversedBounds) {
    EXPECT_THROW(MetricSpace::interval(2, 1), StructuralError);
}

TEST(MetricSpace, FiniteLookup) {
    const auto space = MetricSpace::finite({0, 0.5L, 1, 0.5L, 0, 0.5L, 1, 0.5L, 0}, {"0", "1/2", "1"});
    EXPECT_EQ(space.size(), 3u);
    EXPECT_EQ(space.distance(0, 2), 1);
    EXPECT_EQ(space.index_of_label("1/2"), 1u);
    EXPECT_EQ(space.describe(1), "1/2");
    EXPECT_THROW(space.index_of(3), DomainError);
    EXPECT_THROW(space.index_of(0.5L), DomainError);
    EXPECT_TRUE(space.is_compact());
}

TEST(MetricSpace, NonSquareMatrixIsStructural) {
    EXPECT_THROW(MetricSpace::finite({0, 1, 1}), StructuralError);
    EXPECT_THROW(MetricSpace::finite({0, 1, 1, 0}, {"a"}), StructuralError);
}

TEST(MetricAxioms, ValidMetricPasses) {
    const auto space = MetricSpace::finite({0, 1, 2, 1, 0, 1, 2, 1, 0});
    EXPECT_TRUE(check_metric_axioms(space).ok());
    EXPECT_TRUE(check_metric_axioms(MetricSpace::interval(0, 1)).ok());
}

TEST(MetricAxioms, SingleTriangleViolation) {
    const auto space = MetricSpace::finite({0, 1, 3, 1, 0, 1, 3, 1, 0});
    const auto report = check_metric_axioms(space);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0], (AxiomViolation{AxiomKind::Triangle, 0, 1, 2}));
}

TEST(MetricAxioms, AsymmetryAndIdentity) {
    const auto asym = check_metric_axioms(MetricSpace::finite({0, 1, 2, 0}));
    ASSERT_FALSE(asym.ok());
    EXPECT_EQ(asym.violations.front().kind, AxiomKind::Symmetry);

    const auto ident = check_metric_axioms(MetricSpace::finite({0, 0, 0, 0}));
    ASSERT_FALSE(ident.ok());
    EXPECT_EQ(ident.violations.front().kind, AxiomKind::Identity);

    const auto neg = check_metric_axioms(MetricSpace::finite({0, -1, -1, 0}));
    ASSERT_FALSE(neg.ok());
    EXPECT_EQ(neg.violations.front().kind, AxiomKind::Negative);
}

TEST(MetricAxioms, TriangleWithinSlackPasses) {
    const auto space = MetricSpace::finite({0, 1, 2 + 1e-13L, 1, 0, 1, 2 + 1e-13L, 1, 0});
    EXPECT_TRUE(check_metric_axioms(space).ok());
}

TEST(FiniteSpaceText, ParsesLabelsAndComments) {
    const auto space = parse_finite_space(
        "# three points\n"
        "labels 0 1/2 1\n"
        "0   0.5 1\n"
        "0.5 0   0.5   # middle\n"
        "1   0.5 0\n");
    EXPECT_EQ(space.size(), 3u);
    EXPECT_EQ(space.labels()[1], "1/2");
    EXPECT_EQ(space.entry(0, 2), 1);
}

TEST(FiniteSpaceText, DefaultLabelsAndBadCounts) {
    const auto space = parse_finite_space("0 1\n1 0\n");
    EXPECT_EQ(space.labels(), (std::vector<std::string>{"0", "1"}));
    EXPECT_THROW(parse_finite_space("0 1 1\n"), Error);
    EXPECT_THROW(parse_finite_space("labels a b\n0 1 1\n"), Error);
}

TEST(FormatReal, RoundTripsAndSpecials) {
    EXPECT_EQ(format_real(0.5L), "0.5");
    EXPECT_EQ(format_real(std::numeric_limits<Real>::infinity()), "inf");
    const Real x = 1 / std::sqrt(Real{5});
    EXPECT_NEAR(static_cast<double>(std::stold(format_real(x))), static_cast<double>(x), 1e-16);
}
