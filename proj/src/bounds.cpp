#include "hyperpd/bounds.hpp"

#include <numeric>

namespace hyperpd {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

long long Rational::ceil_value() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational conjecture_bound(long long n, int r, int k) {
  if (r + k <= 0) throw std::invalid_argument("conjecture_bound: r + k must be positive");
  return Rational(n, r + k);
}

Rational winner_bound(long long n, long long m, int r, int k) {
  if (r < 3) throw std::invalid_argument("winner_bound: rank must be at least 3");
  long long edge_coeff = (r - 3) / 2;          // floor, r >= 3
  long long den = (3LL * (r - 1)) / 2 + k;     // floor
  return Rational(n + edge_coeff * m, den);
}

Rational bht_bound(long long n, long long m, int r) {
  if (r < 3) throw std::invalid_argument("bht_bound: rank must be at least 3");
  long long edge_coeff = (r - 3) / 2;
  long long den = (3LL * (r - 1)) / 2;
  return Rational(n + edge_coeff * m, den);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HoldsStrict: return "HOLDS_STRICT";
    case Verdict::HoldsEquality: return "HOLDS_EQUALITY";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

BoundResult judge(long long parameter, const Rational& bound) {
  BoundResult result;
  result.value = bound;
  Rational p(parameter);
  if (p < bound)
    result.verdict = Verdict::HoldsStrict;
  else if (p == bound)
    result.verdict = Verdict::HoldsEquality;
  else
    result.verdict = Verdict::Violated;
  return result;
}

BoundResult not_applicable(std::string why) {
  BoundResult result;
  result.verdict = Verdict::NotApplicable;
  result.note = std::move(why);
  return result;
}

// Balanced complete bipartite K_{s,s} with s = k+2, as a 2-uniform
// hypergraph. Parameter check only: order, rank, regularity, bipartition,
// and all cross pairs present.
bool matches_k22_pattern(const Hypergraph& h, int k) {
  auto r = h.uniformity();
  if (!r || *r != 2) return false;
  int s = k + 2;
  int n = h.vertex_count();
  if (n != 2 * s) return false;
  if (!h.is_connected()) return false;
  for (int v = 0; v < n; ++v)
    if (h.neighbors(v).count() != s) return false;
  // Two-color by BFS; the 2-uniform adjacency must be bipartite with equal
  // sides and every cross pair adjacent.
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    bool ok = true;
    h.neighbors(v).for_each([&](int u) {
      if (color[static_cast<std::size_t>(u)] == -1) {
        color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
        stack.push_back(u);
      } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  int zeros = 0;
  for (int c : color) zeros += c == 0 ? 1 : 0;
  if (zeros != s) return false;
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (color[static_cast<std::size_t>(v)] != color[static_cast<std::size_t>(u)] &&
          !h.neighbors(v).contains(u))
        return false;
  return true;
}

}  // namespace

BoundReport check_bounds(const Hypergraph& h, int k, const CheckOptions& options) {
  if (h.vertex_count() == 0) throw InfeasibleError("check_bounds: empty hypergraph");
  if (k < 0) throw std::invalid_argument("check_bounds: negative budget");

  BoundReport report;
  report.n = h.vertex_count();
  report.m = h.edge_count();
  report.r = h.uniformity();
  report.connected = h.is_connected();
  report.k = k;
  report.rule = options.rule;

  report.gamma_pk = k_power_domination_number(h, k, options.rule, options.limits).optimum;
  if (options.with_domination) report.gamma = domination_number(h, options.limits).optimum;

  bool uniform = report.r.has_value();
  int r = uniform ? *report.r : 0;
  bool order_ok = uniform && k + r <= report.n;

  if (!uniform) {
    report.conjecture = not_applicable("not uniform");
    report.conjecture_ceiling = not_applicable("not uniform");
    report.winner = not_applicable("not uniform");
    report.domination_bound = not_applicable("not uniform");
  } else {
    if (!report.connected) {
      report.conjecture = not_applicable("not connected");
      report.conjecture_ceiling = not_applicable("not connected");
      report.winner = not_applicable("not connected");
    } else if (!order_ok) {
      report.conjecture = not_applicable("requires k + r <= n");
      report.conjecture_ceiling = not_applicable("requires k + r <= n");
      report.winner = not_applicable("requires k + r <= n");
    } else {
      report.conjecture = judge(report.gamma_pk, conjecture_bound(report.n, r, k));
      report.conjecture_ceiling =
          judge(report.gamma_pk, Rational(conjecture_bound(report.n, r, k).ceil_value()));
      report.conjecture_ceiling.note = "remark variant, not a theorem";
      if (r >= 3)
        report.winner = judge(report.gamma_pk, winner_bound(report.n, report.m, r, k));
      else
        report.winner = not_applicable("requires r >= 3");
    }
    if (report.gamma.has_value()) {
      if (r < 3)
        report.domination_bound = not_applicable("requires r >= 3");
      else if (h.has_isolated_vertex())
        report.domination_bound = not_applicable("isolated vertex");
      else
        report.domination_bound = judge(*report.gamma, bht_bound(report.n, report.m, r));
    } else {
      report.domination_bound = not_applicable("domination number not computed");
    }
  }

  report.k22_candidate = matches_k22_pattern(h, k);
  return report;
}

}  // namespace hyperpd
