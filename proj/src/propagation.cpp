#include "hyperpd/propagation.hpp"

#include <algorithm>
#include <limits>

namespace hyperpd {

const char* rule_name(ForcingRule rule) {
  return rule == ForcingRule::WhiteDegree ? "white-degree" : "unobserved";
}

ForcingRule parse_rule(const std::string& name) {
  if (name == "white-degree") return ForcingRule::WhiteDegree;
  if (name == "unobserved") return ForcingRule::UnobservedEdges;
  throw std::invalid_argument("unknown forcing rule '" + name + "'");
}

VertexSet white_neighbors(const Hypergraph& h, const ColorState& st, int v) {
  return h.neighbors(v) - st.blue;
}

namespace {

// Candidate coverage sets for the min-cover search at one vertex: incident
// edges intersected with the white target, deduplicated, with dominated
// candidates (subset of another candidate) dropped.
std::vector<VertexSet> cover_candidates(const Hypergraph& h, int v, const VertexSet& target) {
  std::vector<VertexSet> cands;
  for (int e : h.incident_edges(v)) {
    VertexSet cov = h.edge_set(e) & target;
    if (cov.empty()) continue;
    bool dominated = false;
    for (auto& other : cands) {
      if (cov.is_subset_of(other)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::erase_if(cands, [&](const VertexSet& other) { return other.is_subset_of(cov); });
    cands.push_back(std::move(cov));
  }
  return cands;
}

int greedy_cover_size(const std::vector<VertexSet>& cands, VertexSet uncovered) {
  int used = 0;
  while (!uncovered.empty()) {
    int best = -1, best_gain = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      int gain = (cands[i] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    uncovered -= cands[static_cast<std::size_t>(best)];
    ++used;
  }
  return used;
}

// Exhaustive branch-and-bound on the first uncovered element; `best` enters
// as an upper bound (any cover of that size is already known, or the caller
// only cares whether something strictly smaller exists).
void min_cover_search(const std::vector<VertexSet>& cands, const VertexSet& uncovered, int depth,
                      int& best) {
  if (uncovered.empty()) {
    best = std::min(best, depth);
    return;
  }
  if (depth + 1 >= best) return;
  int pivot = uncovered.first();
  for (const auto& c : cands) {
    if (!c.contains(pivot)) continue;
    min_cover_search(cands, uncovered - c, depth + 1, best);
    if (best <= depth + 1) return;  // cannot improve below depth+1 on this path
  }
}

}  // namespace

int white_degree(const Hypergraph& h, const ColorState& st, int v) {
  VertexSet target = white_neighbors(h, st, v);
  if (target.empty()) return 0;
  auto cands = cover_candidates(h, v, target);
  int best = greedy_cover_size(cands, target);
  min_cover_search(cands, target, 0, best);
  return best;
}

bool white_degree_at_most(const Hypergraph& h, const ColorState& st, int v, int k) {
  VertexSet target = white_neighbors(h, st, v);
  if (target.empty()) return true;
  if (k <= 0) return false;
  auto cands = cover_candidates(h, v, target);
  int best = k + 1;
  min_cover_search(cands, target, 0, best);
  return best <= k;
}

int max_white_degree(const Hypergraph& h, const ColorState& st) {
  int best = 0;
  st.blue.for_each([&](int v) { best = std::max(best, white_degree(h, st, v)); });
  return best;
}

int unobserved_incident_count(const Hypergraph& h, const ColorState& st, int v) {
  int count = 0;
  for (int e : h.incident_edges(v))
    if (!h.edge_set(e).is_subset_of(st.blue)) ++count;
  return count;
}

ColorState closure(const Hypergraph& h, const ColorState& st, int k, ForcingRule rule) {
  if (k < 0) throw std::invalid_argument("closure: negative budget");
  int n = h.vertex_count();
  VertexSet blue = st.blue;
  if (blue.universe_size() != n) throw std::invalid_argument("closure: universe mismatch");
  VertexSet saturated(n);  // blue vertices with N[v] already blue; never useful again
  for (;;) {
    VertexSet fired(n);
    (blue - saturated).for_each([&](int v) {
      if (h.neighbors(v).is_subset_of(blue)) {
        saturated.insert(v);
        return;
      }
      bool eligible = rule == ForcingRule::WhiteDegree
                          ? white_degree_at_most(h, ColorState{blue}, v, k)
                          : unobserved_incident_count(h, ColorState{blue}, v) <= k;
      if (eligible) fired.insert(v);
    });
    if (fired.empty()) return ColorState{blue};
    fired.for_each([&](int v) { blue |= h.neighbors(v); });
  }
}

bool is_k_forcing_set(const Hypergraph& h, const VertexSet& s, int k, ForcingRule rule) {
  return closure(h, ColorState{s}, k, rule).blue == VertexSet::full(h.vertex_count());
}

bool is_k_power_dominating(const Hypergraph& h, const VertexSet& d, int k, ForcingRule rule) {
  return is_k_forcing_set(h, h.closed_neighborhood(d), k, rule);
}

}  // namespace hyperpd
