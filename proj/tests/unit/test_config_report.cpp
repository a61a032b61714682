#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "tcontract/problem_config.hpp"
#include "tcontract/report.hpp"

using namespace tcontract;

namespace {

const std::filesystem::path kConfigs = TCONTRACT_CONFIG_DIR;

ConfigError config_error(std::string_view text) {
    try {
        parse_problem_config(text);
    } catch (const ConfigError& err) {
        return err;
    }
    ADD_FAILURE() << "expected ConfigError for:\n" << text;
    return ConfigError("none", 0, 0);
}

}  // namespace

TEST(Config, LoadsIntervalProblem) {
    const auto cfg = load_problem_config(kConfigs / "ex3_4.cfg");
    EXPECT_EQ(cfg.name, "ex3_4");
    EXPECT_TRUE(cfg.space.is_interval());
    EXPECT_FALSE(cfg.space.bounds().bounded());
    EXPECT_EQ(cfg.sampler.tail_cap, 20);
    ASSERT_TRUE(cfg.solver.k.has_value());
    EXPECT_EQ(*cfg.solver.k, 2 / std::numbers::e_v<Real>);
    EXPECT_EQ(cfg.solver.tol, 1e-10L);
    EXPECT_EQ(cfg.solver.max_iter, 1000000u);
    EXPECT_EQ(cfg.sampler.sample_count, 10000u);
    EXPECT_EQ(cfg.sampler.rng_seed, 0u);
    ASSERT_TRUE(cfg.probe.has_value());
    const auto seq = cfg.probe->generate();
    ASSERT_EQ(seq.size(), 2000u);
    EXPECT_EQ(seq[2], 9);
    EXPECT_EQ(cfg.maps.s(1), 3);
    EXPECT_NEAR(static_cast<double>(cfg.maps.t(1)), std::exp(-1.0), 1e-15);
}

TEST(Config, LoadsFiniteProblemFromSpaceFile) {
    const auto cfg = load_problem_config(kConfigs / "note2_a.cfg");
    ASSERT_TRUE(cfg.space.is_finite());
    EXPECT_EQ(cfg.space.size(), 3u);
    EXPECT_EQ(cfg.maps.t(1), 1);
    EXPECT_EQ(cfg.maps.s(2), 2);
    EXPECT_EQ(cfg.maps.s(1), 0);
    EXPECT_TRUE(cfg.solver.use_phi);
    EXPECT_EQ(cfg.sampler.strategy, SampleStrategy::Grid);
    EXPECT_EQ(cfg.start_point(), 0);
}

TEST(Config, DefaultsToIdentityT) {
    const auto cfg = load_problem_config(kConfigs / "identity_flip.cfg");
    EXPECT_TRUE(cfg.maps.t_is_identity());
    EXPECT_EQ(cfg.t_text, "x");
}

TEST(Config, ErrorsCarryLineAndColumn) {
    const auto unknown_fn = config_error("[space]\nkind = interval\nlo = 0\nhi = 1\n[maps]\nS = sin(x)\n");
    EXPECT_EQ(unknown_fn.line(), 6);
    EXPECT_EQ(unknown_fn.column(), 5);

    const auto unknown_key = config_error("[space]\nkind = interval\n  color = red\n");
    EXPECT_EQ(unknown_key.line(), 3);
    EXPECT_EQ(unknown_key.column(), 3);

    const auto bad_section = config_error("[spaces]\n");
    EXPECT_EQ(bad_section.line(), 1);

    const auto outside = config_error("[space]\nkind = interval\nlo = 0\nhi = 1\n[maps]\nS = 2*x\n");
    EXPECT_EQ(outside.line(), 6);
    EXPECT_NE(std::string(outside.what()).find("outside the domain"), std::string::npos);

    const auto bad_k = config_error("[space]\nkind = interval\nlo = 0\nhi = 1\n[maps]\nS = x/2\n[solver]\nk = 1\n");
    EXPECT_EQ(bad_k.line(), 8);

    const auto bad_table =
        config_error("[space]\nkind = finite\nlabels = a b\nmatrix = 0 1 1 0\n[maps]\nS = table a\n");
    EXPECT_EQ(bad_table.line(), 6);

    const auto bad_label =
        config_error("[space]\nkind = finite\nlabels = a b\nmatrix = 0 1 1 0\n[maps]\nS = table a c\n");
    EXPECT_EQ(bad_label.line(), 6);
}

TEST(Config, StructuralErrors) {
    EXPECT_THROW(parse_problem_config("[maps]\nS = x\n"), ConfigError);
    EXPECT_THROW(parse_problem_config("[space]\nkind = interval\nlo = 0\nhi = 1\n"), ConfigError);
    EXPECT_THROW(parse_problem_config("[space]\nkind = interval\nlo = 0\nlo = 1\n"), ConfigError);
    EXPECT_THROW(parse_problem_config("kind = interval\n"), ConfigError);
    EXPECT_THROW(parse_problem_config("[space]\nkind = interval\nlo = 2\nhi = 1\n[maps]\nS = x\n"), ConfigError);
    EXPECT_THROW(load_problem_config(kConfigs / "missing.cfg"), Error);
}

TEST(Report, SerializeParseRoundTrip) {
    ReportNode node{"solve", {}, {}};
    node.field("problem", std::string("ex3_3")).field("k", Real{0.5}).field("n", std::size_t{42});
    node.child("witness").field("x", std::string("1/2")).field("empty", std::string());
    node.child("inner").child("deeper").field("flag", true);
    const std::string text = serialize(node);
    EXPECT_EQ(text.substr(0, 8), "solve {\n");
    EXPECT_EQ(parse_report(text), node);
    EXPECT_EQ(serialize(parse_report(text)), text);
}

TEST(Report, MalformedText) {
    EXPECT_THROW(parse_report("a {\n  b = 1\n"), ConfigError);
    EXPECT_THROW(parse_report("}\n"), ConfigError);
    EXPECT_THROW(parse_report("a {\n}\nb {\n}\n"), ConfigError);
    EXPECT_THROW(parse_report("a {\n  garbage\n}\n"), ConfigError);
}

TEST(Report, OrbitCsvHeaderAndRows) {
    const auto space = MetricSpace::interval(0, 1);
    Orbit orbit;
    orbit.x0 = 1;
    orbit.points = {1, 0.5L, 0.25L};
    orbit.t_images = orbit.points;
    orbit.residuals = {0.5L, 0.25L};
    orbit.t_residuals = {0.5L, 0.25L};
    std::ostringstream os;
    write_orbit_csv(os, orbit, space);
    EXPECT_EQ(os.str(),
              "n,x,Tx,residual,t_residual,bound\n"
              "0,1,1,0.5,0.5,\n"
              "1,0.5,0.5,0.25,0.25,\n"
              "2,0.25,0.25,,,\n");
}
