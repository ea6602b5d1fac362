#include <random>

#include <doctest.h>

#include "hyperpd/generators.hpp"
#include "hyperpd/solvers.hpp"
#include "oracles.hpp"

using hyperpd::ForcingRule;
using hyperpd::Hypergraph;
using hyperpd::SolveResult;
using hyperpd::VertexSet;

namespace {

Hypergraph two_edge_path() {
  return Hypergraph(5, {{0, 1, 2}, {2, 3, 4}});
}

std::set<int> as_set(const VertexSet& s) {
  auto v = s.to_vector();
  return std::set<int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("domination number") {
  CHECK(hyperpd::domination_number(Hypergraph(3, {{0, 1, 2}})).optimum == 1);
  SolveResult r = hyperpd::domination_number(two_edge_path());
  CHECK(r.optimum == 1);
  CHECK(r.witnesses.front().to_vector() == std::vector<int>{2});
  CHECK(hyperpd::domination_number(hyperpd::bht_tight(5)).optimum == 2);
  CHECK_THROWS_AS(hyperpd::domination_number(Hypergraph(0, {})), hyperpd::InfeasibleError);
  // Isolated vertices must join the dominating set themselves.
  CHECK(hyperpd::domination_number(Hypergraph(4, {{0, 1, 2}})).optimum == 2);
}

TEST_CASE("k power domination number on the constructions") {
  Hypergraph base(3, {{0, 1, 2}});
  CHECK(hyperpd::k_power_domination_number(hyperpd::squid(base, 1), 1).optimum == 3);
  CHECK(hyperpd::k_power_domination_number(hyperpd::squid(base, 2), 2).optimum == 3);
  CHECK(hyperpd::k_power_domination_number(hyperpd::counterexample(1, 0), 1).optimum == 2);
  CHECK(hyperpd::k_power_domination_number(hyperpd::bht_tight(5), 1).optimum == 1);
  CHECK_THROWS_AS(hyperpd::k_power_domination_number(Hypergraph(0, {}), 1),
                  hyperpd::InfeasibleError);
}

TEST_CASE("all minimum sets") {
  SolveResult r = hyperpd::all_minimum_kpds(two_edge_path(), 1);
  CHECK(r.optimum == 1);
  // Every singleton power-dominates this instance.
  REQUIRE(r.witnesses.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(r.witnesses[v].to_vector() == std::vector<int>{v});

  Hypergraph sq = hyperpd::squid(Hypergraph(3, {{0, 1, 2}}), 1);
  SolveResult rs = hyperpd::all_minimum_kpds(sq, 1);
  CHECK(rs.optimum == 3);
  for (const auto& w : rs.witnesses) CHECK(w.count() == 3);
}

TEST_CASE("external private neighbors") {
  Hypergraph h = two_edge_path();
  CHECK(hyperpd::epn(h, 0, VertexSet::of(5, {0, 4})).to_vector() == std::vector<int>{1});
  CHECK(hyperpd::epn(h, 0, VertexSet::of(5, {0})).to_vector() == std::vector<int>{1, 2});
  CHECK(hyperpd::epn(h, 2, VertexSet::of(5, {0, 2})).to_vector() == std::vector<int>{3, 4});
  CHECK_THROWS_AS(hyperpd::epn(h, 1, VertexSet::of(5, {0})), std::invalid_argument);
}

TEST_CASE("fewest components minimum set") {
  CHECK(hyperpd::fewest_components_minimum_kpds(two_edge_path(), 1).to_vector() ==
        std::vector<int>{0});

  // On the squid, the base triangle is connected (one component) while
  // hub-based optima split into three; the base set also wins the lex tie.
  Hypergraph sq = hyperpd::squid(Hypergraph(3, {{0, 1, 2}}), 1);
  VertexSet d = hyperpd::fewest_components_minimum_kpds(sq, 1);
  CHECK(d.to_vector() == std::vector<int>{0, 1, 2});
  CHECK(sq.induced_component_count(d) == 1);

  hyperpd::GsquidSpec spec;
  spec.spine_count = 2;
  spec.budget = 1;
  spec.rank = 3;
  spec.x = {1, 1};
  Hypergraph gs = hyperpd::generalized_squid(spec);
  VertexSet gd = hyperpd::fewest_components_minimum_kpds(gs, 1);
  CHECK(gd.count() == 2);
}

TEST_CASE("lemma 4 on the squid") {
  Hypergraph sq = hyperpd::squid(Hypergraph(3, {{0, 1, 2}}), 1);
  auto report = hyperpd::verify_lemma_4(sq, 1);
  CHECK(report.precondition_ok);
  CHECK(report.pass);
  CHECK(report.holds_for_chosen_d);
  CHECK(report.chosen_d.to_vector() == std::vector<int>{0, 1, 2});
  REQUIRE(report.values.size() == 3);
  for (const auto& value : report.values) {
    CHECK(value.white_degree == 2);
    CHECK(value.ok);
  }
}

TEST_CASE("lemma 5 on the squid") {
  Hypergraph sq = hyperpd::squid(Hypergraph(3, {{0, 1, 2}}), 1);
  auto report = hyperpd::verify_lemma_5(sq, 1);
  CHECK(report.pass);
  for (const auto& value : report.values) {
    CHECK(value.white_degree == 2);
    CHECK(value.epn_size == 3);
  }
}

// The literal per-vertex inequality can fail on the lexicographically pinned
// optimum while another fewest-components optimum satisfies it: on the
// two-edge path with k=1 every singleton is optimal, the pinned choice {1}
// (1-based) covers its whites with one edge, and only the cut vertex {3}
// needs two.
TEST_CASE("lemma 4 separates its literal and existential readings") {
  Hypergraph h = two_edge_path();
  auto report = hyperpd::verify_lemma_4(h, 1);
  CHECK(report.precondition_ok);
  CHECK_FALSE(report.holds_for_chosen_d);
  CHECK(report.chosen_d.to_vector() == std::vector<int>{0});
  REQUIRE(report.values.size() == 1);
  CHECK(report.values.front().white_degree == 1);
  CHECK(report.holds_for_some_min_d);
  REQUIRE(report.satisfying_d.has_value());
  CHECK(report.satisfying_d->to_vector() == std::vector<int>{2});
  CHECK(report.pass);

  auto report5 = hyperpd::verify_lemma_5(h, 1);
  CHECK(report5.pass);
}

// On a single 4-edge with k=1 (order meets the k+3 threshold) every optimum
// is a singleton whose whites sit inside one edge, so even the existential
// reading fails; the stricter k+r order threshold excludes the instance.
TEST_CASE("lemma 4 fails outright on a single 4-edge") {
  Hypergraph h(4, {{0, 1, 2, 3}});
  auto report = hyperpd::verify_lemma_4(h, 1);
  CHECK(report.precondition_ok);
  CHECK_FALSE(report.holds_for_chosen_d);
  CHECK_FALSE(report.holds_for_some_min_d);
  CHECK_FALSE(report.pass);

  auto strict = hyperpd::verify_lemma_4(h, 1, /*min_order=*/1 + 4);
  CHECK_FALSE(strict.precondition_ok);
  CHECK_FALSE(strict.pass);
}

TEST_CASE("lemma preconditions are reported") {
  Hypergraph small(3, {{0, 1, 2}});
  auto report = hyperpd::verify_lemma_4(small, 1);  // n = 3 < k + 3
  CHECK_FALSE(report.precondition_ok);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.note.empty());

  Hypergraph disconnected(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK_FALSE(hyperpd::verify_lemma_4(disconnected, 1).precondition_ok);
}

TEST_CASE("white neighbors against the rest of the set are exactly the private neighbors") {
  std::mt19937_64 rng(7117);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> pick_n(4, 9);
    int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_m(2, 2 * n);
    Hypergraph h = [&] {
      for (;;) {
        try {
          return hyperpd::random_connected_uniform(n, 3, pick_m(rng), rng());
        } catch (const hyperpd::InfeasibleError&) {
        }
      }
    }();
    VertexSet d = hyperpd::fewest_components_minimum_kpds(h, 1);
    d.for_each([&](int v) {
      VertexSet rest = d;
      rest.erase(v);
      hyperpd::ColorState st{h.closed_neighborhood(rest)};
      CHECK(hyperpd::white_neighbors(h, st, v) == hyperpd::epn(h, v, d));
    });
  }
}

TEST_CASE("solver agrees with the all-subsets oracle") {
  std::mt19937_64 rng(1123);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> pick_n(3, 9);
    std::uniform_int_distribution<int> pick_r(2, 4);
    std::uniform_int_distribution<int> pick_k(0, 2);
    int n = pick_n(rng);
    int r = std::min(pick_r(rng), n);
    int k = pick_k(rng);
    std::uniform_int_distribution<int> pick_m(1, 2 * n);
    Hypergraph h = [&]() -> Hypergraph {
      for (;;) {
        try {
          return hyperpd::random_connected_uniform(n, r, pick_m(rng), rng());
        } catch (const hyperpd::InfeasibleError&) {
        }
      }
    }();
    for (ForcingRule rule : {ForcingRule::WhiteDegree, ForcingRule::UnobservedEdges}) {
      SolveResult got = hyperpd::k_power_domination_number(h, k, rule);
      CHECK(got.optimum == oracle::gamma_pk(h, k, rule));
      CHECK(hyperpd::is_k_power_dominating(h, got.witnesses.front(), k, rule));
    }
    // Witness enumeration matches the oracle's exhaustive list.
    SolveResult all = hyperpd::all_minimum_kpds(h, k);
    auto expected = oracle::all_minimum_kpds(h, k, ForcingRule::WhiteDegree);
    std::set<std::set<int>> got_sets, expected_sets(expected.begin(), expected.end());
    for (const auto& w : all.witnesses) got_sets.insert(as_set(w));
    CHECK(got_sets == expected_sets);
    CHECK(all.witnesses.size() == expected.size());
    CHECK(std::is_sorted(all.witnesses.begin(), all.witnesses.end(), hyperpd::lex_less));
    // Domination agreement and degenerate identity.
    CHECK(hyperpd::domination_number(h).optimum == oracle::domination_number(h));
    CHECK(hyperpd::k_power_domination_number(h, 0).optimum ==
          hyperpd::domination_number(h).optimum);
  }
}

TEST_CASE("optimum never grows with the budget") {
  std::mt19937_64 rng(2233);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> pick_n(3, 9);
    int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_m(1, 2 * n);
    Hypergraph h = [&]() -> Hypergraph {
      for (;;) {
        try {
          return hyperpd::random_connected_uniform(n, 3 > n ? n : 3, pick_m(rng), rng());
        } catch (const hyperpd::InfeasibleError&) {
        }
      }
    }();
    int previous = hyperpd::k_power_domination_number(h, 0).optimum;
    for (int k = 1; k <= 3; ++k) {
      int current = hyperpd::k_power_domination_number(h, k).optimum;
      CHECK(current <= previous);
      previous = current;
    }
  }
}

TEST_CASE("search limits are honored") {
  Hypergraph ce = hyperpd::counterexample(2, 1);
  hyperpd::SearchLimits limits;
  limits.max_nodes = 5;
  CHECK_THROWS_AS(hyperpd::k_power_domination_number(ce, 2, ForcingRule::WhiteDegree, limits),
                  hyperpd::SearchTimeout);
}
