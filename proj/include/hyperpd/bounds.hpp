#pragma once

#include <optional>
#include <string>

#include "hyperpd/hypergraph.hpp"
#include "hyperpd/solvers.hpp"

namespace hyperpd {

// Exact rational in lowest terms with positive denominator. All bound
// verdicts go through exact comparisons; no floating point.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  long long ceil_value() const;
  bool is_integer() const { return den_ == 1; }
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// n / (r + k).
Rational conjecture_bound(long long n, int r, int k);

// (n + floor((r-3)/2) * m) / (floor(3(r-1)/2) + k), r >= 3.
Rational winner_bound(long long n, long long m, int r, int k);

// (n + floor((r-3)/2) * m) / floor(3(r-1)/2), r >= 3. Bounds the plain
// domination number.
Rational bht_bound(long long n, long long m, int r);

enum class Verdict { HoldsStrict, HoldsEquality, Violated, NotApplicable };

const char* verdict_name(Verdict v);

struct BoundResult {
  std::optional<Rational> value;  // absent when not applicable
  Verdict verdict = Verdict::NotApplicable;
  std::string note;
};

struct BoundReport {
  int n = 0;
  int m = 0;
  std::optional<int> r;
  bool connected = false;
  int k = 0;
  ForcingRule rule = ForcingRule::WhiteDegree;
  int gamma_pk = 0;
  std::optional<int> gamma;

  BoundResult conjecture;          // gamma_pk <= n/(r+k)
  BoundResult conjecture_ceiling;  // gamma_pk <= ceil(n/(r+k)), informational remark
  BoundResult winner;              // gamma_pk <= (n + floor((r-3)/2)m)/(floor(3(r-1)/2)+k)
  BoundResult domination_bound;    // gamma <= (n + floor((r-3)/2)m)/floor(3(r-1)/2)

  // Informational: the instance matches the complete-bipartite equality
  // pattern for r = 2 (n = 2(k+2), balanced complete bipartite).
  bool k22_candidate = false;
};

struct CheckOptions {
  ForcingRule rule = ForcingRule::WhiteDegree;
  bool with_domination = true;
  SearchLimits limits{};
};

// Solves the instance and evaluates every applicable bound with an exact
// verdict. Hypotheses (connectivity, uniformity, k + r <= n, r >= 3, no
// isolated vertices) are checked per bound; a bound with a failed hypothesis
// is reported NotApplicable rather than judged.
BoundReport check_bounds(const Hypergraph& h, int k, const CheckOptions& options = {});

}  // namespace hyperpd
