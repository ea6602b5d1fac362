#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpd/vertex_set.hpp"

namespace hyperpd {

// Raised by parse_hgr on malformed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a request is structurally impossible (empty instance, or a
// generator parameter combination that cannot be realized).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable hypergraph on vertices 0..n-1. Edges are vertex sets, stored in
// construction order (EdgeId = position); within an edge, vertices are kept
// sorted ascending. Duplicate edges are permitted; the edge count m counts
// multiplicity.
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<std::vector<int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const VertexSet& edge_set(int e) const { return edge_sets_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  // Ids of edges containing v.
  std::span<const int> incident_edges(int v) const;

  // r when every edge has exactly r vertices; absent otherwise (also absent
  // for m = 0).
  std::optional<int> uniformity() const;

  // Connectivity of the "shares an edge" adjacency relation. An isolated
  // vertex disconnects any hypergraph with n >= 2.
  bool is_connected() const;

  // Open neighborhood N(v): vertices sharing an edge with v, excluding v.
  const VertexSet& neighbors(int v) const;

  // N[S] = S together with every neighbor of a member of S.
  VertexSet closed_neighborhood(const VertexSet& s) const;

  // Number of connected components of the adjacency relation restricted to D
  // (two members of D are adjacent iff they share an edge of the hypergraph).
  // D must be nonempty.
  int induced_component_count(const VertexSet& d) const;

  bool has_isolated_vertex() const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<VertexSet> edge_sets_;
  std::vector<std::vector<int>> incident_;
  std::vector<VertexSet> neighbor_sets_;
};

// HGR text format:
//   c <comment>                 (optional, anywhere before the last edge)
//   p hpd <n> <m>               (exactly one header line)
//   e <v1> <v2> ... <vr>        (m lines, 1-based vertex indices)
// Serialization is bit-exact: header, then edges in stored order with
// vertices ascending, single spaces, LF line endings.
Hypergraph parse_hgr(std::string_view text);
std::string serialize_hgr(const Hypergraph& h);
std::string serialize_hgr(const Hypergraph& h, const std::vector<std::string>& comments);

}  // namespace hyperpd
