#include <doctest.h>

#include "hyperpd/generators.hpp"
#include "hyperpd/solvers.hpp"

using hyperpd::GsquidSpec;
using hyperpd::Hypergraph;
using hyperpd::VertexSet;

TEST_CASE("squid arithmetic and layout") {
  Hypergraph base(3, {{0, 1, 2}});
  Hypergraph h = hyperpd::squid(base, 1);
  CHECK(h.vertex_count() == 12);
  CHECK(h.edge_count() == 7);
  CHECK(h.uniformity() == 3);
  CHECK(h.is_connected());
  // Base edge first, then the appendages of vertex 0: legs 3,4 and hub 5.
  CHECK(h.edge(0) == std::vector<int>{0, 1, 2});
  CHECK(h.edge(1) == std::vector<int>{0, 3, 5});
  CHECK(h.edge(2) == std::vector<int>{0, 4, 5});
  CHECK(hyperpd::squid_leg_vertex(base, 1, 1, 0) == 6);
  CHECK(hyperpd::squid_hub_vertex(base, 1, 1, 0) == 8);

  Hypergraph h2 = hyperpd::squid(base, 2);
  CHECK(h2.vertex_count() == 15);
  CHECK(h2.edge_count() == 10);

  // Rank 2 works: no hubs, pendant edges only.
  Hypergraph path(3, {{0, 1}, {1, 2}});
  Hypergraph sp = hyperpd::squid(path, 1);
  CHECK(sp.vertex_count() == 9);
  CHECK(sp.uniformity() == 2);
  CHECK(sp.is_connected());

  CHECK_THROWS_AS(hyperpd::squid(Hypergraph(4, {{0, 1}, {1, 2, 3}}), 1), std::invalid_argument);
  CHECK_THROWS_AS(hyperpd::squid(Hypergraph(3, {{0}, {1}, {2}}), 1), std::invalid_argument);
  CHECK_THROWS_AS(hyperpd::squid(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}}), 1), std::invalid_argument);
}

TEST_CASE("squid optimum equals the base order") {
  for (int k : {1, 2}) {
    Hypergraph base(3, {{0, 1, 2}});
    Hypergraph h = hyperpd::squid(base, k);
    CHECK(h.vertex_count() == base.vertex_count() * (3 + k));
    CHECK(hyperpd::k_power_domination_number(h, k).optimum == base.vertex_count());
  }
}

TEST_CASE("generalized squid canonical layouts") {
  GsquidSpec spec;
  spec.spine_count = 1;
  spec.budget = 1;
  spec.rank = 3;
  spec.x = {1};
  Hypergraph h = hyperpd::generalized_squid(spec);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 2);
  CHECK(h.edge(0) == std::vector<int>{0, 1, 2});
  CHECK(h.edge(1) == std::vector<int>{0, 1, 3});
  CHECK(hyperpd::k_power_domination_number(h, 1).optimum == 1);

  GsquidSpec wide;
  wide.spine_count = 1;
  wide.budget = 1;
  wide.rank = 4;
  wide.x = {2};
  Hypergraph hw = hyperpd::generalized_squid(wide);
  CHECK(hw.vertex_count() == 5);  // r + k
  CHECK(hw.edge_count() == 2);
  // Strong pair 0,1; shared weak vertex is the last weak id 4.
  CHECK(hw.edge(0) == std::vector<int>{0, 1, 2, 4});
  CHECK(hw.edge(1) == std::vector<int>{0, 1, 3, 4});
  CHECK(hyperpd::k_power_domination_number(hw, 1).optimum == 1);
}

TEST_CASE("generalized squid with two spines") {
  GsquidSpec spec;
  spec.spine_count = 2;
  spec.budget = 1;
  spec.rank = 3;
  spec.x = {1, 1};
  Hypergraph h = hyperpd::generalized_squid(spec);
  CHECK(h.vertex_count() == 8);
  CHECK(h.uniformity() == 3);
  CHECK(h.is_connected());
  // Spine edges then the chaining strong edge {s00, s01, s10}.
  CHECK(h.edge_count() == 5);
  CHECK(h.edge(4) == std::vector<int>{0, 1, 2});
  CHECK(hyperpd::k_power_domination_number(h, 1).optimum == 2);

  // Explicit strong edges replace the default chain.
  GsquidSpec manual = spec;
  manual.strong_edges = {{0, 1, 2}};
  Hypergraph hm = hyperpd::generalized_squid(manual);
  CHECK(hm.edge_count() == 5);

  GsquidSpec no_chain = spec;
  no_chain.auto_chain = false;
  CHECK_THROWS_WITH_AS(hyperpd::generalized_squid(no_chain),
                       doctest::Contains("disconnected"), std::invalid_argument);
}

TEST_CASE("generalized squid validation") {
  GsquidSpec spec;
  spec.spine_count = 1;
  spec.budget = 1;
  spec.rank = 3;
  spec.x = {3};  // out of range: must be <= r-1
  CHECK_THROWS_AS(hyperpd::generalized_squid(spec), std::invalid_argument);
  spec.x = {0};
  CHECK_THROWS_AS(hyperpd::generalized_squid(spec), std::invalid_argument);
  spec.x = {1, 1};
  CHECK_THROWS_AS(hyperpd::generalized_squid(spec), std::invalid_argument);

  GsquidSpec bad_edge;
  bad_edge.spine_count = 1;
  bad_edge.budget = 1;
  bad_edge.rank = 3;
  bad_edge.x = {1};
  bad_edge.strong_edges = {{0, 1, 3}};  // 3 is a weak vertex
  CHECK_THROWS_AS(hyperpd::generalized_squid(bad_edge), std::invalid_argument);
  bad_edge.strong_edges = {{0, 1}};  // wrong size
  CHECK_THROWS_AS(hyperpd::generalized_squid(bad_edge), std::invalid_argument);
}

TEST_CASE("spine edges form a minimal cover of the weak vertices") {
  struct Params {
    int d, k, r;
  };
  for (Params p : {Params{1, 1, 3}, {1, 2, 3}, {2, 1, 4}, {1, 2, 5}}) {
    auto [d, k, r] = p;
    GsquidSpec spec;
    spec.spine_count = d;
    spec.budget = k;
    spec.rank = r;
    spec.x.assign(static_cast<std::size_t>(d), std::min(2, r - 1));
    Hypergraph h = hyperpd::generalized_squid(spec);
    for (int spine = 0; spine < d; ++spine) {
      std::vector<VertexSet> spine_edges;
      for (int j = 0; j <= k; ++j) spine_edges.push_back(h.edge_set(spine * (k + 1) + j));
      VertexSet weak(h.vertex_count());
      for (int j = 0; j < k + spec.x[static_cast<std::size_t>(spine)]; ++j)
        weak.insert(hyperpd::gsquid_weak_vertex(spec, spine, j));
      // No k of the k+1 edges cover the weak set, but all k+1 do.
      CHECK(hyperpd::no_small_cover(spine_edges, weak, k));
      CHECK_FALSE(hyperpd::no_small_cover(spine_edges, weak, k + 1));
    }
  }
}

TEST_CASE("counterexample arithmetic") {
  Hypergraph h = hyperpd::counterexample(1, 0);
  CHECK(h.vertex_count() == 15);
  CHECK(h.edge_count() == 6);
  CHECK(h.uniformity() == 7);
  CHECK(h.is_connected());

  Hypergraph h2 = hyperpd::counterexample(2, 1);
  CHECK(h2.vertex_count() == 23);
  CHECK(h2.edge_count() == 9);
  CHECK(h2.uniformity() == 10);
  CHECK(h2.is_connected());

  CHECK_THROWS_AS(hyperpd::counterexample(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(hyperpd::counterexample(1, -1), std::invalid_argument);
}

TEST_CASE("counterexample block layout") {
  // k=1: X={1,2}, Y={3,4}, Z={5,6}, A1={7,8,9}, A2={10,11,12}, A3={13,14,15}
  // in 1-based ids; first edge family is A1+B1+{x_i}+A2.
  Hypergraph h = hyperpd::counterexample(1, 0);
  CHECK(h.edge(0) == std::vector<int>{0, 6, 7, 8, 9, 10, 11});
  CHECK(h.edge(2) == std::vector<int>{4, 9, 10, 11, 12, 13, 14});
  CHECK(h.edge(4) == std::vector<int>{2, 6, 7, 8, 12, 13, 14});
}

TEST_CASE("bht construction") {
  Hypergraph h = hyperpd::bht_tight(5);
  CHECK(h.vertex_count() == 9);
  CHECK(h.edge_count() == 3);
  CHECK(h.uniformity() == 5);
  CHECK(h.is_connected());
  CHECK(h.edge(0) == std::vector<int>{0, 1, 2, 3, 6});
  CHECK(h.edge(1) == std::vector<int>{0, 1, 4, 5, 7});
  CHECK(h.edge(2) == std::vector<int>{2, 3, 4, 5, 8});

  Hypergraph h6 = hyperpd::bht_tight(6);
  CHECK(h6.vertex_count() == 11);
  CHECK(h6.uniformity() == 6);
  CHECK(h6.is_connected());

  CHECK(hyperpd::k_power_domination_number(hyperpd::bht_tight(5), 1).optimum == 1);
  CHECK_THROWS_AS(hyperpd::bht_tight(2), std::invalid_argument);
}

TEST_CASE("random connected uniform generator") {
  Hypergraph a = hyperpd::random_connected_uniform(6, 3, 4, 1);
  Hypergraph b = hyperpd::random_connected_uniform(6, 3, 4, 1);
  CHECK(hyperpd::serialize_hgr(a) == hyperpd::serialize_hgr(b));
  CHECK(a.uniformity() == 3);
  CHECK(a.edge_count() == 4);
  CHECK(a.is_connected());
  // Distinct edges.
  for (int e = 0; e < a.edge_count(); ++e)
    for (int f = e + 1; f < a.edge_count(); ++f) CHECK(a.edge(e) != a.edge(f));

  Hypergraph forced = hyperpd::random_connected_uniform(4, 4, 1, 0);
  CHECK(forced.edge(0) == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS(hyperpd::random_connected_uniform(5, 3, 1, 7), hyperpd::InfeasibleError);
  CHECK_THROWS_AS(hyperpd::random_connected_uniform(4, 3, 5, 7), hyperpd::InfeasibleError);
  CHECK_THROWS_AS(hyperpd::random_connected_uniform(3, 4, 1, 7), std::invalid_argument);

  // Different seeds essentially always differ.
  Hypergraph c = hyperpd::random_connected_uniform(8, 3, 8, 2);
  Hypergraph d = hyperpd::random_connected_uniform(8, 3, 8, 3);
  CHECK(hyperpd::serialize_hgr(c) != hyperpd::serialize_hgr(d));
}
