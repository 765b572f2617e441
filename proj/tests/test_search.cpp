#include <gtest/gtest.h>

#include "hypercolor/report.hpp"
#include "hypercolor/search.hpp"
#include "oracles.hpp"

namespace hypercolor {
namespace {

SearchConfig small_config(SearchMode mode, Parity parity, std::size_t trials) {
  SearchConfig cfg;
  cfg.mode = mode;
  cfg.parity = parity;
  cfg.trials = trials;
  cfg.base_seed = 2024;
  cfg.n_range = {4, 9};
  cfg.m_range = {2, 10};
  cfg.size_range = {2, 4};
  return cfg;
}

TEST(TrialSeed, DependsOnBaseAndIndex) {
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
  EXPECT_EQ(trial_seed(5, 17), trial_seed(5, 17));
}

TEST(SearchConfig, Validation) {
  SearchConfig cfg;
  cfg.size_range = {1, 3};
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.n_range = {5, 4};
  EXPECT_THROW(cfg.validate(), Error);
  EXPECT_NO_THROW(SearchConfig{}.validate());
}

TEST(RunSearch, OddParityGraphsRediscoverEvenCliques) {
  // Dense 2-uniform instances on 4 vertices include K_4 itself, whose
  // 1-intersection graph is 3-chromatic while K_4 needs 4 colors.
  SearchConfig cfg = small_config(SearchMode::conjecture_audit, Parity::odd, 200);
  cfg.n_range = {4, 4};
  cfg.m_range = {5, 6};
  cfg.size_range = {2, 2};
  const auto report = run_search(cfg);
  ASSERT_FALSE(report.violations.empty());
  for (const auto& v : report.violations) {
    EXPECT_EQ(v.kind, "chromatic_gap");
    EXPECT_EQ(v.chromatic, v.ig_chromatic + 1);
    EXPECT_EQ(v.instance.generate(), v.hypergraph);
    EXPECT_EQ(graph_chromatic_number(one_intersection_graph(v.hypergraph)), v.ig_chromatic);
    EXPECT_EQ(oracle::naive_hypergraph_chromatic(v.hypergraph.vertex_count(), oracle::edge_lists(v.hypergraph)),
              v.chromatic);
  }
  EXPECT_EQ(report.unconfirmed_candidates, 0u);
}

TEST(RunSearch, EvenParityFindsNothing) {
  const auto report = run_search(small_config(SearchMode::conjecture_audit, Parity::even, 300));
  EXPECT_TRUE(report.violations.empty());
  EXPECT_GT(report.trials_eligible, 0u);
  EXPECT_EQ(report.trials_run, 300u);
}

TEST(RunSearch, StressModesReportNoInvariantViolations) {
  for (auto mode : {SearchMode::two_color_stress, SearchMode::four_color_stress}) {
    const auto report = run_search(small_config(mode, Parity::any, 300));
    EXPECT_TRUE(report.violations.empty()) << to_string(mode);
    EXPECT_GT(report.trials_eligible, 0u) << to_string(mode);
  }
}

TEST(RunSearch, ThreeUniformAuditUsesTriples) {
  auto cfg = small_config(SearchMode::theorem_audit_3uniform, Parity::any, 100);
  for (std::size_t i = 0; i < 20; ++i) {
    const auto t = derive_trial(cfg, i);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->min_size, 3u);
    EXPECT_EQ(t->max_size, 3u);
  }
  EXPECT_TRUE(run_search(cfg).violations.empty());
}

TEST(RunSearch, CapsAreCountedAsSkips) {
  auto cfg = small_config(SearchMode::conjecture_audit, Parity::any, 50);
  ExactLimits limits;
  limits.max_hypergraph_vertices = 6;
  const auto report = run_search(cfg, limits);
  EXPECT_GT(report.trials_skipped_cap, 0u);
  std::size_t solved = 0;
  for (const auto& [key, count] : report.histogram) solved += count;
  EXPECT_EQ(solved + report.trials_skipped_cap + report.trials_skipped_unsatisfiable, 50u);
}

TEST(RunSearch, ReportIndependentOfWorkerCount) {
  const auto cfg = small_config(SearchMode::conjecture_audit, Parity::any, 200);
  const auto one = report::to_json(run_search(cfg, {}, 1)).dump();
  const auto three = report::to_json(run_search(cfg, {}, 3)).dump();
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, report::to_json(run_search(cfg, {}, 1)).dump());
}

TEST(Report, JsonCarriesSchemaAndViolations) {
  SearchConfig cfg = small_config(SearchMode::conjecture_audit, Parity::odd, 50);
  cfg.n_range = {4, 4};
  cfg.m_range = {6, 6};
  cfg.size_range = {2, 2};
  const auto j = report::to_json(run_search(cfg));
  EXPECT_EQ(j["schema"], "hypercolor.search/1");
  EXPECT_EQ(j["config"]["parity"], "odd");
  ASSERT_FALSE(j["violations"].empty());
  EXPECT_EQ(j["violations"][0]["chromatic"], 4);
  EXPECT_EQ(j["violations"][0]["ig_chromatic"], 3);
  EXPECT_NE(report::to_text(run_search(cfg)).find("violation at trial"), std::string::npos);
}

TEST(Report, TraceJson) {
  const auto r = two_color(build_hypergraph(3, {{0, 1}, {1, 2}}));
  const auto j = report::to_json(r.trace);
  EXPECT_EQ(j["schema"], "hypercolor.trace/1");
  EXPECT_EQ(j["rounds"].size(), 2u);
  EXPECT_EQ(j["rounds"][1]["steps"][0]["newly_monochromatic"], nlohmann::json::array({0}));
}

}  // namespace
}  // namespace hypercolor
