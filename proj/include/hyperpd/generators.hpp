#pragma once

#include <cstdint>
#include <vector>

#include "hyperpd/hypergraph.hpp"

namespace hyperpd {

// Squid augmentation of an r-uniform connected base (r >= 2): every base
// vertex v gains k+1 private "leg" vertices and r-2 shared "hub" vertices,
// joined by k+1 edges {v, hubs..., leg_i}. Output order is n*(r+k).
//
// Numbering: base vertices keep their ids; vertex n + v*(k+1+r-2) starts the
// block for base vertex v, legs first (k+1 of them) then hubs (r-2). Edges:
// base edges in order, then the k+1 appendage edges of vertex 0, 1, ...
Hypergraph squid(const Hypergraph& base, int k);

int squid_leg_vertex(const Hypergraph& base, int k, int v, int i);  // i in 0..k
int squid_hub_vertex(const Hypergraph& base, int k, int v, int j);  // j in 0..r-3

// d spines of strong and weak vertices. Spine i has r - x[i] strong and
// k + x[i] weak vertices; its k+1 edges each take all strong vertices, one
// private weak vertex, and a fixed shared block of x[i]-1 weak vertices, so
// the k+1 edges jointly cover the weak vertices while no k of them do.
// strong_edges (size-r sets of strong-vertex ids, possibly across spines)
// are appended verbatim. With auto_chain and no explicit strong edges, each
// spine i >= 1 is connected to spine 0 by one edge taking all of spine 0's
// strong block plus the first vertices of spine i's (requires
// x[0] + x[i] <= r).
//
// Numbering: all strong vertices first, spine by spine, then all weak
// vertices, spine by spine. Edge order: spine 0's k+1 edges, spine 1's, ...,
// then the strong edges.
struct GsquidSpec {
  int spine_count = 1;  // d
  int budget = 1;       // k
  int rank = 3;         // r
  std::vector<int> x;   // d entries, 1 <= x[i] <= r-1
  std::vector<std::vector<int>> strong_edges;
  bool auto_chain = true;
};

Hypergraph generalized_squid(const GsquidSpec& spec);

int gsquid_strong_vertex(const GsquidSpec& spec, int spine, int j);  // j in 0..r-x[spine]-1
int gsquid_weak_vertex(const GsquidSpec& spec, int spine, int j);    // j in 0..k+x[spine]-1

// True when no subset of at most k of the given edges covers `target`.
bool no_small_cover(const std::vector<VertexSet>& edges, const VertexSet& target, int k);

// Blocks X, Y, Z of k+1 vertices, A1, A2, A3 of k+2, B1, B2 of ell; edges
// A1+B1+{x_i}+A2, then A2+B1+{z_i}+A3, then A1+B2+{y_i}+A3 (each family for
// i = 0..k). (5+2k+ell)-uniform on 9+6k+2*ell vertices with 3(k+1) edges.
//
// Numbering: X, Y, Z, A1, A2, A3, B1, B2, in that order.
Hypergraph counterexample(int k, int ell);

// Three-edge construction: blocks V1 (size floor((r-1)/2)), V2 and V3 (size
// ceil((r-1)/2)) plus vertices v12, v13, v23; edges V1+V2+{v12},
// V1+V3+{v13}, V2'+V3+{v23} where V2' is the first floor((r-1)/2) vertices
// of V2. Numbering: V1, V2, V3, v12, v13, v23.
Hypergraph bht_tight(int r);

// Connected r-uniform hypergraph with exactly m distinct edges, sampled by
// rejection; deterministic for a given seed. Throws InfeasibleError when no
// such hypergraph exists or the retry budget runs out.
Hypergraph random_connected_uniform(int n, int r, int m, std::uint64_t seed);

}  // namespace hyperpd
