#include "hyperpd/solvers.hpp"

#include <algorithm>

namespace hyperpd {

namespace {

class LimitTracker {
 public:
  explicit LimitTracker(const SearchLimits& limits)
      : max_nodes_(limits.max_nodes),
        deadline_(limits.time_budget.count() > 0
                      ? std::chrono::steady_clock::now() + limits.time_budget
                      : std::chrono::steady_clock::time_point::max()) {}

  void tick(std::uint64_t& nodes) {
    ++nodes;
    if (max_nodes_ && nodes > max_nodes_) throw SearchTimeout("node limit exceeded");
    if ((nodes & 63u) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw SearchTimeout("time budget exceeded");
  }

 private:
  std::uint64_t max_nodes_;
  std::chrono::steady_clock::time_point deadline_;
};

// Lexicographically next t-combination of 0..n-1; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
  int t = static_cast<int>(c.size());
  for (int i = t - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - t + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

void require_nonempty(const Hypergraph& h, const char* who) {
  if (h.vertex_count() == 0) throw InfeasibleError(std::string(who) + ": empty hypergraph");
}

struct DominationSearch {
  const Hypergraph& h;
  LimitTracker limits;
  std::uint64_t nodes = 0;
  int best_size;
  VertexSet best;
  VertexSet current;
  VertexSet full;

  DominationSearch(const Hypergraph& hg, const SearchLimits& lim)
      : h(hg),
        limits(lim),
        best_size(hg.vertex_count()),
        best(VertexSet::full(hg.vertex_count())),
        current(hg.vertex_count()),
        full(VertexSet::full(hg.vertex_count())) {}

  void run(const VertexSet& dominated, int size) {
    limits.tick(nodes);
    if (dominated == full) {
      if (size < best_size) {
        best_size = size;
        best = current;
      }
      return;
    }
    if (size + 1 >= best_size) return;
    int u = (full - dominated).first();
    // Some member of N[u] must be chosen to dominate u.
    VertexSet candidates = h.neighbors(u);
    candidates.insert(u);
    candidates.for_each([&](int w) {
      current.insert(w);
      VertexSet next = dominated;
      next.insert(w);
      next |= h.neighbors(w);
      run(next, size + 1);
      current.erase(w);
    });
  }
};

}  // namespace

SolveResult domination_number(const Hypergraph& h, const SearchLimits& limits) {
  require_nonempty(h, "domination_number");
  DominationSearch search(h, limits);
  search.run(VertexSet(h.vertex_count()), 0);
  SolveResult result;
  result.optimum = search.best_size;
  result.witnesses = {search.best};
  result.nodes_explored = search.nodes;
  result.k = 0;
  // Re-verify the witness independently of the search bookkeeping.
  if (h.closed_neighborhood(search.best) != VertexSet::full(h.vertex_count()))
    throw std::logic_error("domination_number: witness failed re-verification");
  return result;
}

namespace {

// Enumerates subsets of 0..n-1 of the given size in lexicographic order,
// testing feasibility; returns all feasible sets of the first feasible size
// when collect_all, else just the first.
SolveResult enumerate_kpds(const Hypergraph& h, int k, ForcingRule rule, bool collect_all,
                           const SearchLimits& limits) {
  require_nonempty(h, "k_power_domination_number");
  if (k < 0) throw std::invalid_argument("k_power_domination_number: negative budget");
  int n = h.vertex_count();
  LimitTracker tracker(limits);
  SolveResult result;
  result.rule = rule;
  result.k = k;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> combo(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i;
    bool more = true;
    while (more) {
      tracker.tick(result.nodes_explored);
      VertexSet d = VertexSet::of(n, combo);
      if (is_k_power_dominating(h, d, k, rule)) {
        result.optimum = size;
        result.witnesses.push_back(std::move(d));
        if (!collect_all) return result;
      }
      more = next_combination(combo, n);
    }
    if (!result.witnesses.empty()) return result;
  }
  throw std::logic_error("k_power_domination_number: no feasible set found");  // unreachable: V is feasible
}

}  // namespace

SolveResult k_power_domination_number(const Hypergraph& h, int k, ForcingRule rule,
                                      const SearchLimits& limits) {
  SolveResult result = enumerate_kpds(h, k, rule, /*collect_all=*/false, limits);
  if (!is_k_power_dominating(h, result.witnesses.front(), k, rule))
    throw std::logic_error("k_power_domination_number: witness failed re-verification");
  return result;
}

SolveResult all_minimum_kpds(const Hypergraph& h, int k, ForcingRule rule,
                             const SearchLimits& limits) {
  return enumerate_kpds(h, k, rule, /*collect_all=*/true, limits);
}

VertexSet epn(const Hypergraph& h, int v, const VertexSet& s) {
  if (!s.contains(v)) throw std::invalid_argument("epn: vertex not in set");
  VertexSet others = s;
  others.erase(v);
  return (h.neighbors(v) - s) - h.closed_neighborhood(others);
}

VertexSet fewest_components_minimum_kpds(const Hypergraph& h, int k, const SearchLimits& limits) {
  SolveResult all = all_minimum_kpds(h, k, ForcingRule::WhiteDegree, limits);
  const VertexSet* best = nullptr;
  int best_components = 0;
  for (const auto& d : all.witnesses) {
    int c = h.induced_component_count(d);
    if (best == nullptr || c < best_components) {
      best = &d;
      best_components = c;
    }
  }
  return *best;  // witnesses are in lexicographic order, so ties keep the lex-min set
}

namespace {

LemmaReport verify_lemma_impl(const Hypergraph& h, int k, int lemma_id, int min_order,
                              const SearchLimits& limits) {
  if (k < 0) throw std::invalid_argument("verify_lemma: negative budget");
  if (min_order < 0) min_order = k + 3;
  LemmaReport report;
  report.lemma_id = lemma_id;
  report.k = k;
  {
    auto r = h.uniformity();
    report.instance = "n=" + std::to_string(h.vertex_count()) + " m=" + std::to_string(h.edge_count()) +
                      " r=" + (r ? std::to_string(*r) : std::string("mixed")) + " k=" + std::to_string(k);
  }
  if (!h.is_connected() || h.vertex_count() < min_order) {
    report.precondition_ok = false;
    report.note = "precondition violated: requires a connected hypergraph with at least " +
                  std::to_string(min_order) + " vertices";
    report.pass = false;
    return report;
  }
  report.precondition_ok = true;

  SolveResult all = all_minimum_kpds(h, k, ForcingRule::WhiteDegree, limits);
  int fewest = 0;
  std::vector<const VertexSet*> candidates;
  for (const auto& d : all.witnesses) {
    int c = h.induced_component_count(d);
    if (candidates.empty() || c < fewest) {
      fewest = c;
      candidates.clear();
    }
    if (c == fewest) candidates.push_back(&d);
  }
  report.minima_examined = candidates.size();

  auto evaluate = [&](const VertexSet& d, std::vector<LemmaVertexValue>* out) {
    bool all_ok = true;
    d.for_each([&](int v) {
      VertexSet rest = d;
      rest.erase(v);
      ColorState st{h.closed_neighborhood(rest)};
      LemmaVertexValue value;
      value.v = v;
      value.white_degree = white_degree(h, st, v);
      value.epn_size = epn(h, v, d).count();
      value.ok = lemma_id == 4 ? value.white_degree >= k + 1 : value.white_degree <= value.epn_size;
      if (!value.ok) all_ok = false;
      if (out) out->push_back(value);
    });
    return all_ok;
  };

  report.chosen_d = *candidates.front();  // lexicographically smallest fewest-components minimum
  report.holds_for_chosen_d = evaluate(report.chosen_d, &report.values);
  if (report.holds_for_chosen_d) {
    report.holds_for_some_min_d = true;
    report.satisfying_d = report.chosen_d;
  } else {
    for (const VertexSet* d : candidates) {
      if (evaluate(*d, nullptr)) {
        report.holds_for_some_min_d = true;
        report.satisfying_d = *d;
        break;
      }
    }
  }

  if (lemma_id == 4) {
    report.pass = report.holds_for_some_min_d;
    if (!report.holds_for_chosen_d && report.holds_for_some_min_d)
      report.note =
          "inequality fails for the lexicographically pinned optimum but holds for another "
          "fewest-components optimum";
    else if (!report.holds_for_some_min_d)
      report.note = "no fewest-components minimum set satisfies the inequality";
  } else {
    report.pass = report.holds_for_chosen_d;
    if (!report.pass) report.note = "cover size exceeded the private-neighbor count";
  }
  return report;
}

}  // namespace

LemmaReport verify_lemma_4(const Hypergraph& h, int k, int min_order, const SearchLimits& limits) {
  return verify_lemma_impl(h, k, 4, min_order, limits);
}

LemmaReport verify_lemma_5(const Hypergraph& h, int k, int min_order, const SearchLimits& limits) {
  return verify_lemma_impl(h, k, 5, min_order, limits);
}

}  // namespace hyperpd
