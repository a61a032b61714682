#include <gtest/gtest.h>

#include "tcontract/commands.hpp"
#include "tcontract/gallery.hpp"

using namespace tcontract;

namespace {

const std::filesystem::path kConfigs = TCONTRACT_CONFIG_DIR;

}  // namespace

TEST(Gallery, HasExactlyTheNineEntriesInOrder) {
    std::vector<std::string> ids;
    for (const auto& e : gallery_entries()) ids.push_back(e.id);
    EXPECT_EQ(ids, (std::vector<std::string>{"ex2_2", "ex3_1", "ex3_2", "ex3_3", "ex3_4", "note2_a",
                                              "note2_b", "banach_identity", "edelstein_sqrt"}));
    EXPECT_THROW(gallery_entry("ex9_9"), ParameterError);
}

TEST(Gallery, EveryEntryConfigParses) {
    for (const auto& e : gallery_entries()) EXPECT_NO_THROW(gallery_config(e)) << e.id;
}

TEST(Gallery, AllEntriesPass) {
    const auto outcome = cmd_gallery("all");
    for (const auto& run : outcome.entries) {
        EXPECT_TRUE(run.passed) << run.id;
        for (const auto& m : run.mismatches) ADD_FAILURE() << run.id << ": " << m;
    }
    EXPECT_EQ(outcome.exit_code, kExitOk);
    EXPECT_NE(outcome.text.find("gallery: 9/9 passed"), std::string::npos);
}

TEST(Gallery, SingleEntryAndDeterminism) {
    const auto a = cmd_gallery("note2_b");
    const auto b = cmd_gallery("note2_b");
    ASSERT_EQ(a.entries.size(), 1u);
    EXPECT_EQ(a.text, b.text);
    EXPECT_THROW(cmd_gallery("nope"), ParameterError);
}

TEST(Gallery, TabulateNote2Maps) {
    const auto space = note2_space();
    EXPECT_EQ(tabulate(space, SelfMap::table("T", {0, 1, 0})), (FiniteMap{0, 1, 0}));
}

TEST(Commands, AnalyzeExitCodes) {
    EXPECT_EQ(cmd_analyze(load_problem_config(kConfigs / "ex2_2.cfg")).exit_code, kExitOk);
    EXPECT_EQ(cmd_analyze(load_problem_config(kConfigs / "identity_flip.cfg")).exit_code, kExitOk);
    EXPECT_EQ(cmd_analyze(load_problem_config(kConfigs / "constant_t.cfg")).exit_code, kExitNegative);
}

TEST(Commands, SolveExitCodes) {
    const auto ok = cmd_solve(load_problem_config(kConfigs / "ex3_3.cfg"));
    EXPECT_EQ(ok.exit_code, kExitOk);
    const auto escape = cmd_solve(load_problem_config(kConfigs / "ex3_4.cfg"));
    EXPECT_EQ(escape.exit_code, kExitNegative);
    ASSERT_TRUE(escape.probe.has_value());
    EXPECT_EQ(escape.probe->verdict, SubsequentialVerdict::EvidenceAgainstSubsequential);
    const auto* result = escape.report.find("fixed_point_result");
    ASSERT_NE(result, nullptr);
    EXPECT_EQ(result->get("status"), "NoConvergence");
}

TEST(Commands, OracleSummaryAndCaps) {
    const auto space = load_finite_space(kConfigs / "note2.space");
    const auto outcome = cmd_oracle(space, 5);
    EXPECT_EQ(outcome.exit_code, kExitOk);
    EXPECT_EQ(outcome.summary.rfind("pairs_checked=729 theorem_violations=0 counterexamples=", 0), 0u);
    EXPECT_THROW(cmd_oracle(space, 2), PreconditionError);
    EXPECT_THROW(cmd_oracle(space, 6), ParameterError);
    EXPECT_THROW(cmd_oracle(load_finite_space(kConfigs / "not_metric.space"), 5), StructuralError);
}
