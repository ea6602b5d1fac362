#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperpd/hypergraph.hpp"
#include "hyperpd/propagation.hpp"

namespace hyperpd {

// Cooperative limits for exact searches. Zero means unlimited.
struct SearchLimits {
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds time_budget{0};
};

struct SearchTimeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveResult {
  int optimum = 0;
  std::vector<VertexSet> witnesses;  // lexicographic order
  std::uint64_t nodes_explored = 0;
  ForcingRule rule = ForcingRule::WhiteDegree;
  int k = 0;
};

// Exact domination number: branch on the first undominated vertex over its
// closed neighborhood, with incumbent pruning. Witness is the first optimum
// found by the (deterministic) search.
SolveResult domination_number(const Hypergraph& h, const SearchLimits& limits = {});

// Exact k-power domination number. Candidates are enumerated in increasing
// cardinality, lexicographic within a cardinality; the first feasible set is
// the witness.
SolveResult k_power_domination_number(const Hypergraph& h, int k,
                                      ForcingRule rule = ForcingRule::WhiteDegree,
                                      const SearchLimits& limits = {});

// All minimum k-power dominating sets, in lexicographic order.
SolveResult all_minimum_kpds(const Hypergraph& h, int k,
                             ForcingRule rule = ForcingRule::WhiteDegree,
                             const SearchLimits& limits = {});

// External private neighbors of v with respect to S: vertices outside S
// adjacent to v but to no other member of S. Requires v in S.
VertexSet epn(const Hypergraph& h, int v, const VertexSet& s);

// Among all minimum k-power dominating sets (normative white-degree rule),
// one minimizing the induced component count; ties broken by the
// lexicographically smallest vertex set.
VertexSet fewest_components_minimum_kpds(const Hypergraph& h, int k,
                                         const SearchLimits& limits = {});

struct LemmaVertexValue {
  int v = 0;
  int white_degree = 0;  // deg_w(v, N[D minus v])
  int epn_size = 0;      // |epn(v, D)|
  bool ok = false;
};

// Outcome of one structural-property check on one instance. A failed check
// is a first-class result: it means the instance falsifies the property, not
// that the verifier errored.
struct LemmaReport {
  int lemma_id = 0;  // 4 or 5
  std::string instance;
  int k = 0;
  bool precondition_ok = false;
  std::string note;
  VertexSet chosen_d;
  std::vector<LemmaVertexValue> values;  // for chosen_d
  bool holds_for_chosen_d = false;
  // Whether some fewest-components minimum set satisfies the per-vertex
  // inequality (the form the downstream bound argument actually consumes).
  bool holds_for_some_min_d = false;
  std::optional<VertexSet> satisfying_d;
  std::uint64_t minima_examined = 0;
  bool pass = false;
};

// Property L4: for a fewest-components minimum k-power dominating set D,
// every v in D satisfies deg_w(v, N[D minus v]) >= k+1. The verdict on the
// lexicographically pinned D is reported as holds_for_chosen_d; `pass` is the
// existential form over all fewest-components minima. `min_order` defaults to
// k+3; pass k+r to use the stricter order threshold.
LemmaReport verify_lemma_4(const Hypergraph& h, int k, int min_order = -1,
                           const SearchLimits& limits = {});

// Property L5: deg_w(v, N[D minus v]) <= |epn(v, D)| for every v in the same
// pinned D.
LemmaReport verify_lemma_5(const Hypergraph& h, int k, int min_order = -1,
                           const SearchLimits& limits = {});

}  // namespace hyperpd
