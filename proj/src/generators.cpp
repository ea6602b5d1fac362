#include "hyperpd/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace hyperpd {

namespace {

int require_uniform(const Hypergraph& h, const char* who) {
  auto r = h.uniformity();
  if (!r) throw std::invalid_argument(std::string(who) + ": base is not uniform");
  return *r;
}

}  // namespace

int squid_leg_vertex(const Hypergraph& base, int k, int v, int i) {
  int r = require_uniform(base, "squid");
  return base.vertex_count() + v * (k + 1 + r - 2) + i;
}

int squid_hub_vertex(const Hypergraph& base, int k, int v, int j) {
  int r = require_uniform(base, "squid");
  return base.vertex_count() + v * (k + 1 + r - 2) + (k + 1) + j;
}

Hypergraph squid(const Hypergraph& base, int k) {
  int r = require_uniform(base, "squid");
  if (r < 2) throw std::invalid_argument("squid: rank must be at least 2");
  if (k < 1) throw std::invalid_argument("squid: budget must be at least 1");
  if (!base.is_connected()) throw std::invalid_argument("squid: base must be connected");
  int n = base.vertex_count();
  std::vector<std::vector<int>> edges = base.edges();
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i <= k; ++i) {
      std::vector<int> e{v};
      for (int j = 0; j < r - 2; ++j) e.push_back(squid_hub_vertex(base, k, v, j));
      e.push_back(squid_leg_vertex(base, k, v, i));
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(n * (r + k), std::move(edges));
}

namespace {

void validate_gsquid_spec(const GsquidSpec& spec) {
  if (spec.spine_count < 1) throw std::invalid_argument("generalized_squid: need at least one spine");
  if (spec.budget < 1) throw std::invalid_argument("generalized_squid: budget must be at least 1");
  if (spec.rank < 2) throw std::invalid_argument("generalized_squid: rank must be at least 2");
  if (static_cast<int>(spec.x.size()) != spec.spine_count)
    throw std::invalid_argument("generalized_squid: x must have one entry per spine");
  for (int xi : spec.x)
    if (xi < 1 || xi > spec.rank - 1)
      throw std::invalid_argument("generalized_squid: x entries must lie in 1..r-1");
}

int gsquid_strong_count(const GsquidSpec& spec) {
  int total = 0;
  for (int xi : spec.x) total += spec.rank - xi;
  return total;
}

}  // namespace

int gsquid_strong_vertex(const GsquidSpec& spec, int spine, int j) {
  validate_gsquid_spec(spec);
  if (spine < 0 || spine >= spec.spine_count) throw std::out_of_range("gsquid_strong_vertex: bad spine");
  if (j < 0 || j >= spec.rank - spec.x[static_cast<std::size_t>(spine)])
    throw std::out_of_range("gsquid_strong_vertex: bad index");
  int offset = 0;
  for (int i = 0; i < spine; ++i) offset += spec.rank - spec.x[static_cast<std::size_t>(i)];
  return offset + j;
}

int gsquid_weak_vertex(const GsquidSpec& spec, int spine, int j) {
  validate_gsquid_spec(spec);
  if (spine < 0 || spine >= spec.spine_count) throw std::out_of_range("gsquid_weak_vertex: bad spine");
  if (j < 0 || j >= spec.budget + spec.x[static_cast<std::size_t>(spine)])
    throw std::out_of_range("gsquid_weak_vertex: bad index");
  int offset = gsquid_strong_count(spec);
  for (int i = 0; i < spine; ++i) offset += spec.budget + spec.x[static_cast<std::size_t>(i)];
  return offset + j;
}

bool no_small_cover(const std::vector<VertexSet>& edges, const VertexSet& target, int k) {
  int m = static_cast<int>(edges.size());
  int cap = std::min(k, m);
  // Subsets by increasing size; a covering subset of size <= k refutes.
  for (int size = 0; size <= cap; ++size) {
    std::vector<int> combo(static_cast<std::size_t>(size));
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
      VertexSet covered(target.universe_size());
      for (int i : combo) covered |= edges[static_cast<std::size_t>(i)];
      if (target.is_subset_of(covered)) return false;
      // next combination
      int t = size;
      int i = t - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == m - t + i) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j)
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return true;
}

Hypergraph generalized_squid(const GsquidSpec& spec) {
  validate_gsquid_spec(spec);
  int d = spec.spine_count, k = spec.budget, r = spec.rank;
  int strong_total = gsquid_strong_count(spec);
  int n = 0;
  for (int xi : spec.x) n += (r - xi) + (k + xi);

  std::vector<std::vector<int>> edges;
  for (int i = 0; i < d; ++i) {
    int xi = spec.x[static_cast<std::size_t>(i)];
    std::vector<int> strong;
    for (int j = 0; j < r - xi; ++j) strong.push_back(gsquid_strong_vertex(spec, i, j));
    // Privates are the first k+1 weak vertices; the shared block is the rest.
    std::vector<int> shared;
    for (int j = k + 1; j < k + xi; ++j) shared.push_back(gsquid_weak_vertex(spec, i, j));
    for (int j = 0; j <= k; ++j) {
      std::vector<int> e = strong;
      e.insert(e.end(), shared.begin(), shared.end());
      e.push_back(gsquid_weak_vertex(spec, i, j));
      edges.push_back(std::move(e));
    }
  }

  std::vector<std::vector<int>> strong_edges = spec.strong_edges;
  if (strong_edges.empty() && spec.auto_chain && d >= 2) {
    for (int i = 1; i < d; ++i) {
      int x0 = spec.x[0], xi = spec.x[static_cast<std::size_t>(i)];
      if (x0 + xi > r)
        throw std::invalid_argument(
            "generalized_squid: default chaining edge infeasible for spine " + std::to_string(i) +
            " (x[0] + x[i] > r); supply strong_edges explicitly");
      std::vector<int> e;
      for (int j = 0; j < r - x0; ++j) e.push_back(gsquid_strong_vertex(spec, 0, j));
      for (int j = 0; j < x0; ++j) e.push_back(gsquid_strong_vertex(spec, i, j));
      strong_edges.push_back(std::move(e));
    }
  }
  for (const auto& e : strong_edges) {
    if (static_cast<int>(e.size()) != r)
      throw std::invalid_argument("generalized_squid: strong edge is not rank-sized");
    for (int v : e)
      if (v < 0 || v >= strong_total)
        throw std::invalid_argument("generalized_squid: strong edge touches a non-strong vertex");
    edges.push_back(e);
  }

  Hypergraph h(n, std::move(edges));
  if (!h.is_connected()) throw std::invalid_argument("generalized_squid: result is disconnected");

  // Self-check the defining certificate: within each spine, no k of the k+1
  // edges cover the weak vertices.
  for (int i = 0; i < d; ++i) {
    int xi = spec.x[static_cast<std::size_t>(i)];
    std::vector<VertexSet> spine_edges;
    int base = 0;
    for (int p = 0; p < i; ++p) base += k + 1;
    for (int j = 0; j <= k; ++j) spine_edges.push_back(h.edge_set(base + j));
    VertexSet weak(n);
    for (int j = 0; j < k + xi; ++j) weak.insert(gsquid_weak_vertex(spec, i, j));
    if (!no_small_cover(spine_edges, weak, k))
      throw std::logic_error("generalized_squid: spine cover certificate failed");
  }
  return h;
}

Hypergraph counterexample(int k, int ell) {
  if (k < 1) throw std::invalid_argument("counterexample: budget must be at least 1");
  if (ell < 0) throw std::invalid_argument("counterexample: pad must be nonnegative");
  int q = k + 1;
  int x0 = 0, y0 = q, z0 = 2 * q;
  int a1 = 3 * q, a2 = a1 + (k + 2), a3 = a2 + (k + 2);
  int b1 = a3 + (k + 2), b2 = b1 + ell;
  int n = b2 + ell;

  auto block = [](int start, int len) {
    std::vector<int> out(static_cast<std::size_t>(len));
    std::iota(out.begin(), out.end(), start);
    return out;
  };
  std::vector<int> A1 = block(a1, k + 2), A2 = block(a2, k + 2), A3 = block(a3, k + 2);
  std::vector<int> B1 = block(b1, ell), B2 = block(b2, ell);

  auto make_edge = [](const std::vector<int>& p, const std::vector<int>& q1, int single,
                      const std::vector<int>& p2) {
    std::vector<int> e = p;
    e.insert(e.end(), q1.begin(), q1.end());
    e.push_back(single);
    e.insert(e.end(), p2.begin(), p2.end());
    return e;
  };

  std::vector<std::vector<int>> edges;
  for (int i = 0; i < q; ++i) edges.push_back(make_edge(A1, B1, x0 + i, A2));
  for (int i = 0; i < q; ++i) edges.push_back(make_edge(A2, B1, z0 + i, A3));
  for (int i = 0; i < q; ++i) edges.push_back(make_edge(A1, B2, y0 + i, A3));
  return Hypergraph(n, std::move(edges));
}

Hypergraph bht_tight(int r) {
  if (r < 3) throw std::invalid_argument("bht_tight: rank must be at least 3");
  int lo = (r - 1) / 2, hi = (r - 1) - lo;  // floor and ceil of (r-1)/2
  int v1 = 0, v2 = lo, v3 = lo + hi;
  int v12 = lo + 2 * hi, v13 = v12 + 1, v23 = v12 + 2;
  int n = v12 + 3;

  std::vector<int> e1, e2, e3;
  for (int j = 0; j < lo; ++j) e1.push_back(v1 + j);
  for (int j = 0; j < hi; ++j) e1.push_back(v2 + j);
  e1.push_back(v12);
  for (int j = 0; j < lo; ++j) e2.push_back(v1 + j);
  for (int j = 0; j < hi; ++j) e2.push_back(v3 + j);
  e2.push_back(v13);
  for (int j = 0; j < lo; ++j) e3.push_back(v2 + j);  // V2' = first lo vertices of V2
  for (int j = 0; j < hi; ++j) e3.push_back(v3 + j);
  e3.push_back(v23);
  return Hypergraph(n, {e1, e2, e3});
}

namespace {

// C(n, r) capped to avoid overflow; anything beyond the cap is plenty here.
std::uint64_t binomial_capped(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<std::uint64_t>(n - r + i);
    result /= static_cast<std::uint64_t>(i);
    if (result > cap) return cap;
  }
  return result;
}

}  // namespace

Hypergraph random_connected_uniform(int n, int r, int m, std::uint64_t seed) {
  if (n < 1 || r < 1 || m < 0) throw std::invalid_argument("random_connected_uniform: bad parameters");
  if (r > n) throw std::invalid_argument("random_connected_uniform: rank exceeds order");
  if (m == 0) {
    if (n == 1) return Hypergraph(1, {});
    throw InfeasibleError("random_connected_uniform: no edges cannot connect n >= 2 vertices");
  }
  constexpr std::uint64_t kCap = 1'000'000'000;
  if (static_cast<std::uint64_t>(m) > binomial_capped(n, r, kCap))
    throw InfeasibleError("random_connected_uniform: fewer than m distinct edges exist");
  if (static_cast<long long>(m) * (r - 1) < n - 1)
    throw InfeasibleError("random_connected_uniform: " + std::to_string(m) + " edges of rank " +
                          std::to_string(r) + " cannot connect " + std::to_string(n) + " vertices");

  std::mt19937_64 rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(n));
  constexpr int kAttempts = 2000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;
    long long draws = 0, draw_cap = 200LL * m + 1000;
    while (static_cast<int>(edges.size()) < m && draws < draw_cap) {
      ++draws;
      std::iota(pool.begin(), pool.end(), 0);
      for (int i = 0; i < r; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
      }
      std::vector<int> edge(pool.begin(), pool.begin() + r);
      std::sort(edge.begin(), edge.end());
      if (seen.insert(edge).second) edges.push_back(std::move(edge));
    }
    if (static_cast<int>(edges.size()) < m) continue;
    Hypergraph h(n, std::move(edges));
    if (h.is_connected()) return h;
  }
  throw InfeasibleError("random_connected_uniform: retry budget exhausted for n=" + std::to_string(n) +
                        " r=" + std::to_string(r) + " m=" + std::to_string(m));
}

}  // namespace hyperpd
