#pragma once

#include <string>

#include "hyperpd/hypergraph.hpp"
#include "hyperpd/vertex_set.hpp"

namespace hyperpd {

// The two color-change rules. WhiteDegree is the normative rule: a blue
// vertex v fires when at most k of its incident edges suffice to cover its
// white neighbors. UnobservedEdges fires when v lies in at most k edges that
// still contain a white vertex. Both rules color all of N(v) blue on firing;
// they differ only in when a vertex becomes eligible.
enum class ForcingRule { WhiteDegree, UnobservedEdges };

const char* rule_name(ForcingRule rule);           // "white-degree" / "unobserved"
ForcingRule parse_rule(const std::string& name);

// Blue/white partition during propagation; everything outside `blue` is white.
struct ColorState {
  VertexSet blue;
};

// N(v) minus the blue set.
VertexSet white_neighbors(const Hypergraph& h, const ColorState& st, int v);

// Exact minimum number of edges containing v whose union covers the white
// neighbors of v; 0 when v has none. Branch-and-bound seeded with a greedy
// upper bound; a cover always exists since every white neighbor shares an
// edge with v.
int white_degree(const Hypergraph& h, const ColorState& st, int v);

// Decision form of white_degree: is there a cover of size <= k? Exact, but
// stops as soon as the bound is settled.
bool white_degree_at_most(const Hypergraph& h, const ColorState& st, int v, int k);

// Maximum white degree over the blue vertices (0 when no vertex is blue).
int max_white_degree(const Hypergraph& h, const ColorState& st);

// Number of edges containing v that still contain a white vertex.
int unobserved_incident_count(const Hypergraph& h, const ColorState& st, int v);

// Fixpoint of the color-change rule: sweeps fire every vertex eligible
// against the sweep-start state until a sweep fires nothing. Monotone in the
// blue set and in k, so the fixpoint is independent of firing order.
ColorState closure(const Hypergraph& h, const ColorState& st, int k, ForcingRule rule);

// closure(S) colors every vertex.
bool is_k_forcing_set(const Hypergraph& h, const VertexSet& s, int k, ForcingRule rule);

// closure(N[D]) colors every vertex.
bool is_k_power_dominating(const Hypergraph& h, const VertexSet& d, int k, ForcingRule rule);

}  // namespace hyperpd
