#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperpd/bounds.hpp"
#include "hyperpd/generators.hpp"
#include "hyperpd/solvers.hpp"

namespace hyperpd {

struct CampaignConfig {
  std::string family = "random";  // "random" | "generated"
  std::vector<int> ranks{3};
  std::vector<int> budgets{1};
  int n_min = 0;  // 0: start at r + k (keeps every bound hypothesis satisfied)
  int n_max = 10;
  int m_min = 0;  // 0: connectivity minimum ceil((n-1)/(r-1))
  int m_max = 0;  // 0: min(C(n,r), 2n)
  int samples = 100;
  std::uint64_t seed = 0;
  ForcingRule rule = ForcingRule::WhiteDegree;

  bool check_bounds = true;
  bool check_lemma4 = false;
  bool check_lemma5 = false;
  bool check_rule_equivalence = false;
  int rule_equivalence_cap = 12;  // skip the exhaustive probe above this order
  int lemma_min_order = -1;       // forwarded to the lemma verifiers

  int timeout_ms = 10000;  // per instance; 0 disables
  int threads = 0;         // 0: hardware concurrency, capped by HYPERPD_THREADS
  bool with_timings = false;
  std::string embed = "flagged";  // "none" | "flagged" | "all"
};

struct InstanceRecord {
  int index = 0;
  std::string provenance;
  std::string status = "ok";  // "ok" | "timeout" | "error"
  std::string error;
  int n = 0;
  int m = 0;
  std::optional<int> r;
  int k = 0;
  std::optional<int> gamma_pk;
  std::optional<BoundReport> bounds;
  std::optional<LemmaReport> lemma4;
  std::optional<LemmaReport> lemma5;
  std::optional<std::vector<int>> separating_set;  // 0-based; 1-based in JSON
  bool flagged = false;
  std::string hgr;  // embedded per config.embed
  double elapsed_ms = 0.0;
};

struct CampaignSummary {
  int samples = 0;
  int ok = 0;
  int timeouts = 0;
  int errors = 0;
  int bound_violations = 0;
  int lemma4_failures = 0;
  int lemma4_chosen_d_violations = 0;  // literal form fails on the pinned optimum
  int lemma5_failures = 0;
  int rule_separations = 0;
  std::vector<int> flagged_indices;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<InstanceRecord> records;
  CampaignSummary summary;
};

// Runs the configured campaign. Record content is a pure function of
// (config, seed); worker count and scheduling never change it (timings are
// recorded only when config.with_timings).
CampaignReport run_campaign(const CampaignConfig& config);

// Exhaustive probe for a set D on which the two forcing rules disagree about
// is_k_power_dominating; absent when none exists or the order exceeds `cap`.
std::optional<std::vector<int>> rule_equivalence_separation(const Hypergraph& h, int k,
                                                            int cap = 12);

nlohmann::json campaign_report_json(const CampaignReport& report);
nlohmann::json bound_report_json(const BoundReport& report);
nlohmann::json lemma_report_json(const LemmaReport& report);

std::string campaign_summary_line(const CampaignReport& report);

// Worker count after applying the HYPERPD_THREADS cap; always at least 1.
int resolve_thread_count(int requested);

}  // namespace hyperpd
