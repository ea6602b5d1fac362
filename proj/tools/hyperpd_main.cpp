#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperpd/bounds.hpp"
#include "hyperpd/campaign.hpp"
#include "hyperpd/generators.hpp"
#include "hyperpd/solvers.hpp"
#include "hyperpd/version.hpp"

namespace {

using nlohmann::json;

bool g_json_only = false;

bool table_wanted() { return !g_json_only && isatty(fileno(stderr)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hyperpd::ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
}

hyperpd::Hypergraph load_instance(const std::string& path) {
  return hyperpd::parse_hgr(read_file(path));
}

hyperpd::SearchLimits limits_from(int timeout_ms) {
  hyperpd::SearchLimits limits;
  if (timeout_ms > 0) limits.time_budget = std::chrono::milliseconds(timeout_ms);
  return limits;
}

json witnesses_json(const std::vector<hyperpd::VertexSet>& witnesses) {
  json out = json::array();
  for (const auto& w : witnesses) {
    json one = json::array();
    for (int v : w.to_vector()) one.push_back(v + 1);
    out.push_back(std::move(one));
  }
  return out;
}

int cmd_solve(const std::string& input, int k, const std::string& rule_str, bool all_minimum,
              int timeout_ms) {
  hyperpd::Hypergraph h = load_instance(input);
  hyperpd::ForcingRule rule = hyperpd::parse_rule(rule_str);
  hyperpd::SolveResult result =
      all_minimum ? hyperpd::all_minimum_kpds(h, k, rule, limits_from(timeout_ms))
                  : hyperpd::k_power_domination_number(h, k, rule, limits_from(timeout_ms));
  json out;
  out["schema"] = hyperpd::kSolveSchema;
  out["input"] = input;
  out["n"] = h.vertex_count();
  out["m"] = h.edge_count();
  out["k"] = k;
  out["rule"] = rule_name(rule);
  out["gamma_pk"] = result.optimum;
  out["all_minimum"] = all_minimum;
  out["witnesses"] = witnesses_json(result.witnesses);
  out["nodes_explored"] = result.nodes_explored;
  std::cout << out.dump(2) << "\n";
  if (table_wanted()) {
    std::cerr << "gamma_p^" << k << " = " << result.optimum << "  (rule " << rule_name(rule)
              << ", " << result.witnesses.size() << " witness"
              << (result.witnesses.size() == 1 ? "" : "es") << ", " << result.nodes_explored
              << " candidates tested)\n";
  }
  return 0;
}

int cmd_check(const std::string& input, int k, const std::string& rule_str, bool with_gamma,
              int timeout_ms) {
  hyperpd::Hypergraph h = load_instance(input);
  hyperpd::CheckOptions options;
  options.rule = hyperpd::parse_rule(rule_str);
  options.with_domination = with_gamma;
  options.limits = limits_from(timeout_ms);
  hyperpd::BoundReport report = hyperpd::check_bounds(h, k, options);

  // Findings (including VIOLATED verdicts) exit 0; a witness that fails
  // re-verification is an internal fault and exits 4.
  hyperpd::SolveResult solved =
      hyperpd::k_power_domination_number(h, k, options.rule, options.limits);
  if (!hyperpd::is_k_power_dominating(h, solved.witnesses.front(), k, options.rule))
    throw std::logic_error("check: witness failed re-verification");

  json out = hyperpd::bound_report_json(report);
  out["schema"] = hyperpd::kCheckSchema;
  out["input"] = input;
  std::cout << out.dump(2) << "\n";
  if (table_wanted()) {
    auto line = [&](const char* name, const hyperpd::BoundResult& b) {
      std::cerr << "  " << name << ": " << verdict_name(b.verdict);
      if (b.value) std::cerr << "  (bound " << b.value->to_string() << ")";
      std::cerr << "\n";
    };
    std::cerr << "n=" << report.n << " m=" << report.m << " r="
              << (report.r ? std::to_string(*report.r) : "mixed") << " gamma_p^" << k << "="
              << report.gamma_pk;
    if (report.gamma) std::cerr << " gamma=" << *report.gamma;
    std::cerr << "\n";
    line("conjecture ", report.conjecture);
    line("ceiling    ", report.conjecture_ceiling);
    line("winner     ", report.winner);
    line("domination ", report.domination_bound);
  }
  return 0;
}

int cmd_verify_lemmas(const std::string& input, int k, const std::string& threshold,
                      int timeout_ms) {
  hyperpd::Hypergraph h = load_instance(input);
  int min_order = -1;  // default: k + 3
  if (threshold == "k+r") {
    auto r = h.uniformity();
    if (!r) throw hyperpd::InfeasibleError("verify-lemmas: k+r threshold needs a uniform instance");
    min_order = k + *r;
  } else if (threshold != "k+3") {
    throw std::invalid_argument("--order-threshold must be k+3 or k+r");
  }
  auto limits = limits_from(timeout_ms);
  hyperpd::LemmaReport l4 = hyperpd::verify_lemma_4(h, k, min_order, limits);
  hyperpd::LemmaReport l5 = hyperpd::verify_lemma_5(h, k, min_order, limits);
  json out;
  out["schema"] = hyperpd::kLemmasSchema;
  out["input"] = input;
  out["lemma4"] = hyperpd::lemma_report_json(l4);
  out["lemma5"] = hyperpd::lemma_report_json(l5);
  std::cout << out.dump(2) << "\n";
  if (table_wanted()) {
    std::cerr << "lemma 4: " << (l4.pass ? "pass" : "FAIL")
              << (l4.precondition_ok && !l4.holds_for_chosen_d ? " (pinned optimum violates)" : "")
              << "\nlemma 5: " << (l5.pass ? "pass" : "FAIL") << "\n";
  }
  return 0;
}

int emit_generated(const hyperpd::Hypergraph& h, const std::string& provenance,
                   const std::string& output) {
  std::string text =
      hyperpd::serialize_hgr(h, {provenance, std::string("tool: ") + hyperpd::kVersion});
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  if (table_wanted())
    std::cerr << "generated n=" << h.vertex_count() << " m=" << h.edge_count() << "\n";
  return 0;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

int cmd_campaign(hyperpd::CampaignConfig config, const std::string& ranks_str,
                 const std::string& budgets_str, const std::string& checks_str,
                 const std::string& rule_str, const std::string& output, const std::string& csv) {
  config.ranks = parse_int_list(ranks_str, "--ranks");
  config.budgets = parse_int_list(budgets_str, "--budgets");
  config.rule = hyperpd::parse_rule(rule_str);
  config.check_bounds = false;
  config.check_lemma4 = false;
  config.check_lemma5 = false;
  config.check_rule_equivalence = false;
  std::stringstream ss(checks_str);
  std::string check;
  while (std::getline(ss, check, ',')) {
    if (check == "bounds")
      config.check_bounds = true;
    else if (check == "lemma4")
      config.check_lemma4 = true;
    else if (check == "lemma5")
      config.check_lemma5 = true;
    else if (check == "rule-equivalence")
      config.check_rule_equivalence = true;
    else
      throw std::invalid_argument("--checks: unknown check '" + check + "'");
  }

  hyperpd::CampaignReport report = hyperpd::run_campaign(config);
  std::string text = hyperpd::campaign_report_json(report).dump(2) + "\n";
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);

  if (!csv.empty()) {
    std::ostringstream table;
    table << "index,provenance,status,n,m,r,k,gamma_pk,violations,lemma4,lemma5,separation,"
             "flagged\n";
    for (const auto& rec : report.records) {
      int violations = 0;
      if (rec.bounds)
        for (const hyperpd::BoundResult* b :
             {&rec.bounds->conjecture, &rec.bounds->conjecture_ceiling, &rec.bounds->winner,
              &rec.bounds->domination_bound})
          violations += b->verdict == hyperpd::Verdict::Violated ? 1 : 0;
      table << rec.index << ",\"" << rec.provenance << "\"," << rec.status << "," << rec.n << ","
            << rec.m << "," << (rec.r ? std::to_string(*rec.r) : "") << "," << rec.k << ","
            << (rec.gamma_pk ? std::to_string(*rec.gamma_pk) : "") << "," << violations << ","
            << (rec.lemma4 ? (rec.lemma4->pass ? "pass" : "fail") : "") << ","
            << (rec.lemma5 ? (rec.lemma5->pass ? "pass" : "fail") : "") << ","
            << (rec.separating_set ? "yes" : "") << "," << (rec.flagged ? "yes" : "") << "\n";
    }
    write_file(csv, table.str());
  }

  std::cout << hyperpd::campaign_summary_line(report) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(hyperpd::kVersion) +
               " - exact k-power domination toolkit for uniform hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hyperpd::kVersion);
  app.add_flag("--json", g_json_only, "suppress the human-readable table on stderr");

  std::string input, output, rule = "white-degree";
  int k = 1, timeout_ms = 0;

  auto* solve = app.add_subcommand("solve", "compute gamma_p^k for an HGR instance");
  bool all_minimum = false;
  solve->add_option("-i,--input", input, "HGR instance")->required();
  solve->add_option("-k", k, "budget (k >= 0)")->check(CLI::NonNegativeNumber);
  solve->add_option("--rule", rule, "forcing rule")
      ->check(CLI::IsMember({"white-degree", "unobserved"}));
  solve->add_flag("--all", all_minimum, "enumerate every minimum set");
  solve->add_option("--timeout-ms", timeout_ms, "wall-clock budget (0 = none)");

  auto* check = app.add_subcommand("check", "evaluate all bounds with exact verdicts");
  bool no_gamma = false;
  check->add_option("-i,--input", input, "HGR instance")->required();
  check->add_option("-k", k, "budget")->check(CLI::NonNegativeNumber);
  check->add_option("--rule", rule, "forcing rule")
      ->check(CLI::IsMember({"white-degree", "unobserved"}));
  check->add_flag("--no-gamma", no_gamma, "skip the domination number");
  check->add_option("--timeout-ms", timeout_ms, "wall-clock budget (0 = none)");

  auto* lemmas = app.add_subcommand("verify-lemmas", "check the optimum-structure properties");
  std::string threshold = "k+3";
  lemmas->add_option("-i,--input", input, "HGR instance")->required();
  lemmas->add_option("-k", k, "budget")->check(CLI::NonNegativeNumber);
  lemmas->add_option("--order-threshold", threshold, "minimum order precondition: k+3 or k+r");
  lemmas->add_option("--timeout-ms", timeout_ms, "wall-clock budget (0 = none)");

  auto* generate = app.add_subcommand("generate", "write a construction as HGR");
  generate->require_subcommand(1);

  auto* gen_squid = generate->add_subcommand("squid", "attach legs and hubs to every base vertex");
  std::string base_path;
  gen_squid->add_option("--base", base_path, "HGR base instance")->required();
  gen_squid->add_option("-k", k, "budget (k >= 1)");
  gen_squid->add_option("-o,--output", output, "output path (stdout when absent)");

  auto* gen_gsquid = generate->add_subcommand("gsquid", "spined strong/weak construction");
  int d = 1, rank = 3;
  std::string x_str = "1";
  std::vector<std::string> strong_edges_str;
  bool no_chain = false;
  gen_gsquid->add_option("-d", d, "spine count");
  gen_gsquid->add_option("-k", k, "budget");
  gen_gsquid->add_option("-r", rank, "rank");
  gen_gsquid->add_option("--x", x_str, "comma-separated x values, one per spine");
  gen_gsquid->add_option("--strong-edge", strong_edges_str,
                         "extra strong edge as comma-separated 1-based ids (repeatable)");
  gen_gsquid->add_flag("--no-chain", no_chain, "do not add default chaining edges");
  gen_gsquid->add_option("-o,--output", output, "output path");

  auto* gen_ce = generate->add_subcommand("counterexample", "conjecture-violating construction");
  int ell = 0;
  gen_ce->add_option("-k", k, "budget (k >= 1)");
  gen_ce->add_option("--ell", ell, "pad block size");
  gen_ce->add_option("-o,--output", output, "output path");

  auto* gen_bht = generate->add_subcommand("bht", "three-edge tightness construction");
  gen_bht->add_option("-r", rank, "rank (r >= 3)");
  gen_bht->add_option("-o,--output", output, "output path");

  auto* gen_random = generate->add_subcommand("random", "seeded connected uniform instance");
  int n = 6, m = 4;
  std::uint64_t seed = 0;
  gen_random->add_option("-n", n, "order");
  gen_random->add_option("-r", rank, "rank");
  gen_random->add_option("-m", m, "edge count");
  gen_random->add_option("--seed", seed, "RNG seed");
  gen_random->add_option("-o,--output", output, "output path");

  auto* campaign = app.add_subcommand("campaign", "run randomized or construction sweeps");
  hyperpd::CampaignConfig config;
  std::string ranks_str = "3", budgets_str = "1", checks_str = "bounds", csv;
  campaign->add_option("--family", config.family, "random | generated")
      ->check(CLI::IsMember({"random", "generated"}));
  campaign->add_option("--ranks", ranks_str, "comma-separated ranks");
  campaign->add_option("--budgets", budgets_str, "comma-separated budgets");
  campaign->add_option("--n-min", config.n_min, "minimum order (0: r+k)");
  campaign->add_option("--n-max", config.n_max, "maximum order");
  campaign->add_option("--m-min", config.m_min, "minimum edge count (0: connectivity floor)");
  campaign->add_option("--m-max", config.m_max, "maximum edge count (0: min(C(n,r), 2n))");
  campaign->add_option("--samples", config.samples, "instances to run");
  campaign->add_option("--seed", config.seed, "master seed");
  campaign->add_option("--rule", rule, "forcing rule")
      ->check(CLI::IsMember({"white-degree", "unobserved"}));
  campaign->add_option("--checks", checks_str,
                       "comma-separated: bounds,lemma4,lemma5,rule-equivalence");
  campaign->add_option("--timeout-ms", config.timeout_ms, "per-instance budget (0 = none)");
  campaign->add_option("--threads", config.threads,
                       "worker count (0: auto, capped by HYPERPD_THREADS)");
  campaign->add_option("--embed", config.embed, "embed HGR text: none | flagged | all")
      ->check(CLI::IsMember({"none", "flagged", "all"}));
  campaign->add_flag("--with-timings", config.with_timings, "include per-instance timings");
  campaign->add_option("-o,--output", output, "report path (stdout when absent)");
  campaign->add_option("--csv", csv, "also write a per-instance CSV table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(input, k, rule, all_minimum, timeout_ms);
    if (check->parsed()) return cmd_check(input, k, rule, !no_gamma, timeout_ms);
    if (lemmas->parsed()) return cmd_verify_lemmas(input, k, threshold, timeout_ms);
    if (generate->parsed()) {
      if (gen_squid->parsed()) {
        hyperpd::Hypergraph base = load_instance(base_path);
        return emit_generated(hyperpd::squid(base, k),
                              "generator: squid k=" + std::to_string(k) +
                                  " base-n=" + std::to_string(base.vertex_count()) +
                                  " base-m=" + std::to_string(base.edge_count()),
                              output);
      }
      if (gen_gsquid->parsed()) {
        hyperpd::GsquidSpec spec;
        spec.spine_count = d;
        spec.budget = k;
        spec.rank = rank;
        spec.x = parse_int_list(x_str, "--x");
        spec.auto_chain = !no_chain;
        for (const auto& edge_str : strong_edges_str) {
          std::vector<int> ids = parse_int_list(edge_str, "--strong-edge");
          for (int& id : ids) --id;
          spec.strong_edges.push_back(std::move(ids));
        }
        std::string provenance = "generator: gsquid d=" + std::to_string(d) +
                                 " k=" + std::to_string(k) + " r=" + std::to_string(rank) +
                                 " x=" + x_str +
                                 (spec.strong_edges.empty() ? " chain=auto" : " chain=explicit");
        return emit_generated(hyperpd::generalized_squid(spec), provenance, output);
      }
      if (gen_ce->parsed())
        return emit_generated(hyperpd::counterexample(k, ell),
                              "generator: counterexample k=" + std::to_string(k) +
                                  " ell=" + std::to_string(ell),
                              output);
      if (gen_bht->parsed())
        return emit_generated(hyperpd::bht_tight(rank), "generator: bht r=" + std::to_string(rank),
                              output);
      if (gen_random->parsed())
        return emit_generated(hyperpd::random_connected_uniform(n, rank, m, seed),
                              "generator: random n=" + std::to_string(n) +
                                  " r=" + std::to_string(rank) + " m=" + std::to_string(m) +
                                  " seed=" + std::to_string(seed),
                              output);
    }
    if (campaign->parsed())
      return cmd_campaign(config, ranks_str, budgets_str, checks_str, rule, output, csv);
  } catch (const hyperpd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hyperpd::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hyperpd::SearchTimeout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
