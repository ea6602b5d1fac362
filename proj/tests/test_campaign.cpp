#include <doctest.h>

#include "hyperpd/campaign.hpp"

using hyperpd::CampaignConfig;
using hyperpd::CampaignReport;
using hyperpd::ForcingRule;
using hyperpd::Hypergraph;

TEST_CASE("campaign runs and summarizes") {
  CampaignConfig config;
  config.ranks = {3};
  config.budgets = {1};
  config.n_max = 8;
  config.samples = 25;
  config.seed = 7;
  config.check_lemma4 = true;
  config.check_lemma5 = true;
  CampaignReport report = hyperpd::run_campaign(config);
  REQUIRE(report.records.size() == 25);
  CHECK(report.summary.ok == 25);
  CHECK(report.summary.timeouts == 0);
  CHECK(report.summary.errors == 0);
  // Rank 3 keeps the conjecture and the stronger bound safe.
  CHECK(report.summary.bound_violations == 0);
  CHECK(report.summary.lemma4_failures == 0);
  CHECK(report.summary.lemma5_failures == 0);
  for (const auto& rec : report.records) {
    CHECK(rec.r == 3);
    CHECK(rec.n >= 4);
    CHECK(rec.n <= 8);
    CHECK(rec.gamma_pk.has_value());
  }
}

TEST_CASE("campaign reports are byte-identical across thread counts and reruns") {
  CampaignConfig config;
  config.ranks = {3, 4};
  config.budgets = {1, 2};
  config.n_max = 9;
  config.samples = 30;
  config.seed = 99;
  config.check_rule_equivalence = true;

  config.threads = 1;
  std::string one = hyperpd::campaign_report_json(hyperpd::run_campaign(config)).dump(2);
  config.threads = 4;
  std::string four = hyperpd::campaign_report_json(hyperpd::run_campaign(config)).dump(2);
  CHECK(one == four);
  std::string again = hyperpd::campaign_report_json(hyperpd::run_campaign(config)).dump(2);
  CHECK(four == again);
}

TEST_CASE("flagged instances embed reproducible hgr text") {
  // The generated family includes the conjecture-violating construction, so
  // flagged records must appear and carry their instance inline.
  CampaignConfig config;
  config.family = "generated";
  config.ranks = {3};
  config.budgets = {1};
  config.samples = 5;  // squid, gsquid, bht, counterexample(ell=0), counterexample(ell=1)
  config.seed = 1;
  CampaignReport report = hyperpd::run_campaign(config);
  CHECK(report.summary.bound_violations > 0);
  bool found = false;
  for (const auto& rec : report.records) {
    if (!rec.flagged) continue;
    found = true;
    REQUIRE_FALSE(rec.hgr.empty());
    Hypergraph back = hyperpd::parse_hgr(rec.hgr);
    CHECK(back.vertex_count() == rec.n);
    CHECK(back.edge_count() == rec.m);
  }
  CHECK(found);
}

TEST_CASE("the two rules disagree about power domination on a fixed instance") {
  // Triple wheel plus a pendant edge: from N[{5}] the white-degree rule
  // forces everything at k=2 while the unobserved-edge rule stalls. The
  // campaign probe reports exactly this kind of separating set.
  Hypergraph h(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {0, 4, 5}});
  bool wd = hyperpd::is_k_power_dominating(h, hyperpd::VertexSet::of(6, {5}), 2,
                                           ForcingRule::WhiteDegree);
  bool ue = hyperpd::is_k_power_dominating(h, hyperpd::VertexSet::of(6, {5}), 2,
                                           ForcingRule::UnobservedEdges);
  CHECK(wd);
  CHECK_FALSE(ue);
}

TEST_CASE("campaign config validation") {
  CampaignConfig config;
  config.samples = 0;
  CHECK_THROWS_AS(hyperpd::run_campaign(config), std::invalid_argument);
  config.samples = 1;
  config.family = "nope";
  CHECK_THROWS_AS(hyperpd::run_campaign(config), std::invalid_argument);
  config.family = "random";
  config.ranks = {5};
  config.budgets = {9};
  config.n_max = 10;  // 5 + 9 > 10: no feasible order
  CHECK_THROWS_AS(hyperpd::run_campaign(config), std::invalid_argument);
}

TEST_CASE("worker count respects the environment cap") {
  setenv("HYPERPD_THREADS", "2", 1);
  CHECK(hyperpd::resolve_thread_count(0) <= 2);
  CHECK(hyperpd::resolve_thread_count(8) == 2);
  CHECK(hyperpd::resolve_thread_count(1) == 1);
  unsetenv("HYPERPD_THREADS");
  CHECK(hyperpd::resolve_thread_count(8) == 8);
}

TEST_CASE("infeasible instance parameters are recorded as errors, not fatal") {
  CampaignConfig config;
  config.ranks = {3};
  config.budgets = {1};
  config.n_min = 4;
  config.n_max = 4;
  config.m_min = 10;  // only C(4,3) = 4 distinct edges exist
  config.m_max = 10;
  config.samples = 3;
  config.seed = 2;
  CampaignReport report = hyperpd::run_campaign(config);
  CHECK(report.summary.errors == 3);
  CHECK(report.summary.ok == 0);
  for (const auto& rec : report.records) {
    CHECK(rec.status == "error");
    CHECK_FALSE(rec.error.empty());
  }
}

TEST_CASE("campaign json carries schema and config echo") {
  CampaignConfig config;
  config.samples = 2;
  config.seed = 5;
  config.n_max = 6;
  auto json = hyperpd::campaign_report_json(hyperpd::run_campaign(config));
  CHECK(json["schema"] == "hyperpd-campaign/1");
  CHECK(json["config"]["seed"] == 5);
  CHECK(json["records"].size() == 2);
  CHECK(json["summary"]["samples"] == 2);
  // Timings stay out of the report unless requested, keeping bytes stable.
  CHECK_FALSE(json["records"][0].contains("elapsed_ms"));
}
