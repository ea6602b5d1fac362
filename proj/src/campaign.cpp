#include "hyperpd/campaign.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "hyperpd/version.hpp"

namespace hyperpd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t binomial_capped(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    if (result > cap) return cap;
  }
  return result;
}

void validate_config(const CampaignConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("campaign: samples must be positive");
  if (config.family != "random" && config.family != "generated")
    throw std::invalid_argument("campaign: unknown family '" + config.family + "'");
  if (config.embed != "none" && config.embed != "flagged" && config.embed != "all")
    throw std::invalid_argument("campaign: embed must be none, flagged, or all");
  if (config.ranks.empty() || config.budgets.empty())
    throw std::invalid_argument("campaign: rank and budget lists must be nonempty");
  for (int r : config.ranks)
    if (r < 2) throw std::invalid_argument("campaign: ranks must be at least 2");
  for (int k : config.budgets)
    if (k < 0) throw std::invalid_argument("campaign: budgets must be nonnegative");
  if (config.family == "random") {
    for (int r : config.ranks)
      for (int k : config.budgets) {
        int n_lo = std::max(config.n_min > 0 ? config.n_min : r + k, r);
        if (n_lo > config.n_max)
          throw std::invalid_argument("campaign: no feasible order for r=" + std::to_string(r) +
                                      " k=" + std::to_string(k) + " with n_max=" +
                                      std::to_string(config.n_max));
      }
  }
}

struct Instance {
  Hypergraph h;
  std::string provenance;
  int k;
};

Instance make_random_instance(const CampaignConfig& config, int index) {
  std::mt19937_64 rng(splitmix64(config.seed ^ (static_cast<std::uint64_t>(index) + 1)));
  auto pick = [&rng](const std::vector<int>& xs) {
    std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
    return xs[d(rng)];
  };
  int r = pick(config.ranks);
  int k = pick(config.budgets);
  int n_lo = std::max(config.n_min > 0 ? config.n_min : r + k, r);
  std::uniform_int_distribution<int> pick_n(n_lo, config.n_max);
  int n = pick_n(rng);
  long long m_lo = config.m_min > 0 ? config.m_min : (n - 1 + r - 2) / (r - 1);
  m_lo = std::max(m_lo, 1LL);
  long long m_hi = config.m_max > 0 ? config.m_max
                                    : static_cast<long long>(binomial_capped(n, r, 1u << 20));
  m_hi = std::min(m_hi, static_cast<long long>(binomial_capped(n, r, 1u << 20)));
  if (config.m_max == 0) m_hi = std::min(m_hi, 2LL * n);
  if (m_hi < m_lo) m_hi = m_lo;
  std::uniform_int_distribution<long long> pick_m(m_lo, m_hi);
  int m = static_cast<int>(pick_m(rng));
  std::uint64_t edge_seed = rng();
  Hypergraph h = random_connected_uniform(n, r, m, edge_seed);
  std::string provenance = "random(n=" + std::to_string(n) + ",r=" + std::to_string(r) +
                           ",m=" + std::to_string(m) + ",seed=" + std::to_string(edge_seed) + ")";
  return Instance{std::move(h), std::move(provenance), k};
}

Instance make_generated_instance(const CampaignConfig& config, int index) {
  struct Entry {
    Hypergraph h;
    std::string provenance;
    int k;
  };
  std::vector<Entry> sweep;
  for (int k : config.budgets) {
    if (k < 1) continue;  // the constructions require a positive budget
    for (int r : config.ranks) {
      std::vector<int> base_edge(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) base_edge[static_cast<std::size_t>(i)] = i;
      Hypergraph base(r, {base_edge});
      sweep.push_back({squid(base, k),
                       "squid(base=K" + std::to_string(r) + "-edge,k=" + std::to_string(k) + ")", k});
      GsquidSpec spec;
      spec.spine_count = 2;
      spec.budget = k;
      spec.rank = r;
      spec.x = {1, 1};
      sweep.push_back({generalized_squid(spec),
                       "gsquid(d=2,k=" + std::to_string(k) + ",r=" + std::to_string(r) + ",x=1,1)", k});
      if (r >= 3)
        sweep.push_back({bht_tight(r), "bht(r=" + std::to_string(r) + ")", k});
    }
    sweep.push_back({counterexample(k, 0), "counterexample(k=" + std::to_string(k) + ",ell=0)", k});
    sweep.push_back({counterexample(k, 1), "counterexample(k=" + std::to_string(k) + ",ell=1)", k});
  }
  if (sweep.empty()) throw std::invalid_argument("campaign: generated family needs a budget >= 1");
  Entry& e = sweep[static_cast<std::size_t>(index) % sweep.size()];
  return Instance{std::move(e.h), std::move(e.provenance), e.k};
}

InstanceRecord run_instance(const CampaignConfig& config, int index) {
  InstanceRecord record;
  record.index = index;
  auto start = std::chrono::steady_clock::now();
  try {
    Instance inst = config.family == "random" ? make_random_instance(config, index)
                                              : make_generated_instance(config, index);
    record.provenance = inst.provenance;
    record.n = inst.h.vertex_count();
    record.m = inst.h.edge_count();
    record.r = inst.h.uniformity();
    record.k = inst.k;

    SearchLimits limits;
    if (config.timeout_ms > 0) limits.time_budget = std::chrono::milliseconds(config.timeout_ms);

    if (config.check_bounds) {
      CheckOptions options;
      options.rule = config.rule;
      options.limits = limits;
      record.bounds = check_bounds(inst.h, inst.k, options);
      record.gamma_pk = record.bounds->gamma_pk;
      for (const BoundResult* b : {&record.bounds->conjecture, &record.bounds->conjecture_ceiling,
                                   &record.bounds->winner, &record.bounds->domination_bound})
        if (b->verdict == Verdict::Violated) record.flagged = true;
    }
    if (config.check_lemma4) {
      record.lemma4 = verify_lemma_4(inst.h, inst.k, config.lemma_min_order, limits);
      if (!record.lemma4->pass || !record.lemma4->holds_for_chosen_d) record.flagged = true;
    }
    if (config.check_lemma5) {
      record.lemma5 = verify_lemma_5(inst.h, inst.k, config.lemma_min_order, limits);
      if (!record.lemma5->pass) record.flagged = true;
    }
    if (config.check_rule_equivalence) {
      record.separating_set =
          rule_equivalence_separation(inst.h, inst.k, config.rule_equivalence_cap);
      if (record.separating_set) record.flagged = true;
    }
    if (config.embed == "all" || (config.embed == "flagged" && record.flagged))
      record.hgr = serialize_hgr(inst.h);
  } catch (const SearchTimeout&) {
    record.status = "timeout";
  } catch (const std::exception& e) {
    record.status = "error";
    record.error = e.what();
  }
  record.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

CampaignSummary summarize(const std::vector<InstanceRecord>& records) {
  CampaignSummary s;
  s.samples = static_cast<int>(records.size());
  for (const auto& rec : records) {
    if (rec.status == "ok")
      ++s.ok;
    else if (rec.status == "timeout")
      ++s.timeouts;
    else
      ++s.errors;
    if (rec.bounds) {
      for (const BoundResult* b : {&rec.bounds->conjecture, &rec.bounds->conjecture_ceiling,
                                   &rec.bounds->winner, &rec.bounds->domination_bound})
        if (b->verdict == Verdict::Violated) ++s.bound_violations;
    }
    if (rec.lemma4) {
      if (!rec.lemma4->pass) ++s.lemma4_failures;
      if (rec.lemma4->precondition_ok && !rec.lemma4->holds_for_chosen_d)
        ++s.lemma4_chosen_d_violations;
    }
    if (rec.lemma5 && !rec.lemma5->pass) ++s.lemma5_failures;
    if (rec.separating_set) ++s.rule_separations;
    if (rec.flagged) s.flagged_indices.push_back(rec.index);
  }
  return s;
}

}  // namespace

std::optional<std::vector<int>> rule_equivalence_separation(const Hypergraph& h, int k, int cap) {
  int n = h.vertex_count();
  if (n > cap || n >= 31) return std::nullopt;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet d(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) d.insert(v);
    bool wd = is_k_power_dominating(h, d, k, ForcingRule::WhiteDegree);
    bool ue = is_k_power_dominating(h, d, k, ForcingRule::UnobservedEdges);
    if (wd != ue) return d.to_vector();
  }
  return std::nullopt;
}

int resolve_thread_count(int requested) {
  int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* cap = std::getenv("HYPERPD_THREADS")) {
    int limit = std::atoi(cap);
    if (limit >= 1) threads = std::min(threads, limit);
  }
  return threads;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  validate_config(config);
  CampaignReport report;
  report.config = config;
  report.records.resize(static_cast<std::size_t>(config.samples));

  int threads = std::min(resolve_thread_count(config.threads), config.samples);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int index = next.fetch_add(1);
      if (index >= config.samples) return;
      report.records[static_cast<std::size_t>(index)] = run_instance(config, index);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  report.summary = summarize(report.records);
  return report;
}

namespace {

nlohmann::json vertices_1based(const std::vector<int>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : vs) out.push_back(v + 1);
  return out;
}

nlohmann::json bound_result_json(const BoundResult& b) {
  nlohmann::json out;
  out["verdict"] = verdict_name(b.verdict);
  if (b.value) out["value"] = b.value->to_string();
  if (!b.note.empty()) out["note"] = b.note;
  return out;
}

}  // namespace

nlohmann::json bound_report_json(const BoundReport& report) {
  nlohmann::json out;
  out["n"] = report.n;
  out["m"] = report.m;
  if (report.r)
    out["r"] = *report.r;
  else
    out["r"] = nullptr;
  out["connected"] = report.connected;
  out["k"] = report.k;
  out["rule"] = rule_name(report.rule);
  out["gamma_pk"] = report.gamma_pk;
  if (report.gamma) out["gamma"] = *report.gamma;
  out["bounds"] = {
      {"conjecture", bound_result_json(report.conjecture)},
      {"conjecture_ceiling", bound_result_json(report.conjecture_ceiling)},
      {"winner", bound_result_json(report.winner)},
      {"domination", bound_result_json(report.domination_bound)},
  };
  out["k22_candidate"] = report.k22_candidate;
  return out;
}

nlohmann::json lemma_report_json(const LemmaReport& report) {
  nlohmann::json out;
  out["lemma"] = report.lemma_id;
  out["instance"] = report.instance;
  out["k"] = report.k;
  out["precondition_ok"] = report.precondition_ok;
  if (!report.note.empty()) out["note"] = report.note;
  if (report.precondition_ok) {
    out["chosen_d"] = vertices_1based(report.chosen_d.to_vector());
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : report.values)
      values.push_back({{"v", v.v + 1},
                        {"white_degree", v.white_degree},
                        {"epn", v.epn_size},
                        {"ok", v.ok}});
    out["values"] = values;
    out["holds_for_chosen_d"] = report.holds_for_chosen_d;
    out["holds_for_some_min_d"] = report.holds_for_some_min_d;
    if (report.satisfying_d) out["satisfying_d"] = vertices_1based(report.satisfying_d->to_vector());
    out["minima_examined"] = report.minima_examined;
  }
  out["pass"] = report.pass;
  return out;
}

nlohmann::json campaign_report_json(const CampaignReport& report) {
  const CampaignConfig& config = report.config;
  nlohmann::json cfg;
  cfg["family"] = config.family;
  cfg["ranks"] = config.ranks;
  cfg["budgets"] = config.budgets;
  cfg["n_min"] = config.n_min;
  cfg["n_max"] = config.n_max;
  cfg["m_min"] = config.m_min;
  cfg["m_max"] = config.m_max;
  cfg["samples"] = config.samples;
  cfg["seed"] = config.seed;
  cfg["rule"] = rule_name(config.rule);
  cfg["checks"] = {{"bounds", config.check_bounds},
                   {"lemma4", config.check_lemma4},
                   {"lemma5", config.check_lemma5},
                   {"rule_equivalence", config.check_rule_equivalence}};
  cfg["timeout_ms"] = config.timeout_ms;
  cfg["embed"] = config.embed;

  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : report.records) {
    nlohmann::json r;
    r["index"] = rec.index;
    r["provenance"] = rec.provenance;
    r["status"] = rec.status;
    if (!rec.error.empty()) r["error"] = rec.error;
    r["n"] = rec.n;
    r["m"] = rec.m;
    if (rec.r)
      r["r"] = *rec.r;
    else
      r["r"] = nullptr;
    r["k"] = rec.k;
    if (rec.gamma_pk) r["gamma_pk"] = *rec.gamma_pk;
    if (rec.bounds) r["bounds_report"] = bound_report_json(*rec.bounds);
    if (rec.lemma4) r["lemma4"] = lemma_report_json(*rec.lemma4);
    if (rec.lemma5) r["lemma5"] = lemma_report_json(*rec.lemma5);
    if (rec.separating_set) r["rule_separating_set"] = vertices_1based(*rec.separating_set);
    r["flagged"] = rec.flagged;
    if (!rec.hgr.empty()) r["hgr"] = rec.hgr;
    if (config.with_timings) r["elapsed_ms"] = rec.elapsed_ms;
    records.push_back(std::move(r));
  }

  const CampaignSummary& s = report.summary;
  nlohmann::json summary;
  summary["samples"] = s.samples;
  summary["ok"] = s.ok;
  summary["timeouts"] = s.timeouts;
  summary["errors"] = s.errors;
  summary["bound_violations"] = s.bound_violations;
  summary["lemma4_failures"] = s.lemma4_failures;
  summary["lemma4_chosen_d_violations"] = s.lemma4_chosen_d_violations;
  summary["lemma5_failures"] = s.lemma5_failures;
  summary["rule_separations"] = s.rule_separations;
  summary["flagged_indices"] = s.flagged_indices;

  nlohmann::json out;
  out["schema"] = kCampaignSchema;
  out["version"] = kVersion;
  out["config"] = cfg;
  out["records"] = records;
  out["summary"] = summary;
  return out;
}

std::string campaign_summary_line(const CampaignReport& report) {
  const CampaignSummary& s = report.summary;
  return "campaign: " + std::to_string(s.samples) + " samples, " + std::to_string(s.ok) + " ok, " +
         std::to_string(s.timeouts) + " timeouts, " + std::to_string(s.errors) + " errors, " +
         std::to_string(s.bound_violations) + " bound violations, " +
         std::to_string(s.lemma4_failures) + "+" + std::to_string(s.lemma5_failures) +
         " lemma failures, " + std::to_string(s.rule_separations) + " rule separations";
}

}  // namespace hyperpd
