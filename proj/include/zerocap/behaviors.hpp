#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zerocap/scalar.hpp"

namespace zerocap {

/// Input/output cardinalities of a two-party experiment.
struct Scenario {
  int x_card = 1;
  int y_card = 1;
  int a_card = 1;
  int b_card = 1;

  std::size_t size() const {
    return static_cast<std::size_t>(x_card) * y_card * a_card * b_card;
  }
  /// Row-major over (x, y, a, b).
  std::size_t index(int x, int y, int a, int b) const {
    return ((static_cast<std::size_t>(x) * y_card + y) * a_card + a) * b_card + b;
  }
  bool contains(int x, int y, int a, int b) const {
    return x >= 0 && x < x_card && y >= 0 && y < y_card && a >= 0 && a < a_card && b >= 0 &&
           b < b_card;
  }
  void check() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Joint conditional distribution p(a,b|x,y). Immutable. Construction checks
/// shape and mode uniformity only; use validate_behavior for the
/// probabilistic invariants.
class Behavior {
 public:
  Behavior(Scenario scenario, std::vector<Scalar> table);

  const Scenario& scenario() const { return scenario_; }
  NumericMode mode() const { return mode_; }
  const Scalar& operator()(int x, int y, int a, int b) const {
    return table_[scenario_.index(x, y, a, b)];
  }
  const Scalar& at(int x, int y, int a, int b) const;
  std::span<const Scalar> table() const { return table_; }

  friend bool operator==(const Behavior& lhs, const Behavior& rhs);

 private:
  Scenario scenario_;
  NumericMode mode_;
  std::vector<Scalar> table_;
};

/// Signed rational weights over (x, y, a, b).
class BellFunctional {
 public:
  BellFunctional(Scenario scenario, std::vector<mpq_class> coefficients);
  static BellFunctional zero(Scenario scenario);

  const Scenario& scenario() const { return scenario_; }
  const mpq_class& operator()(int x, int y, int a, int b) const {
    return coefficients_[scenario_.index(x, y, a, b)];
  }
  mpq_class& operator()(int x, int y, int a, int b) {
    return coefficients_[scenario_.index(x, y, a, b)];
  }

 private:
  Scenario scenario_;
  std::vector<mpq_class> coefficients_;
};

/// Nonnegativity, range and per-(x,y) normalization. Rational checks are
/// exact; floating sums may deviate from 1 by at most 1e-9.
ValidationReport validate_behavior(const Behavior& b);

struct SignalingCheck {
  bool no_signaling = true;
  double max_violation = 0.0;
};

/// Compares every marginal p(a|x,y) across y (and p(b|x,y) across x).
/// Exact in rational mode; `tol` applies to floating mode.
SignalingCheck is_no_signaling(const Behavior& b, double tol = 1e-9);

Scalar marginal_alice(const Behavior& b, int x, int a, int y);
Scalar marginal_bob(const Behavior& b, int y, int b_out, int x);

/// p(b|x,y,a) = p(a,b|x,y) / p(a|x,y); nullopt when p(a|x,y) is zero.
std::optional<Scalar> conditional_bob(const Behavior& b, int y, int b_out, int x, int a);

/// The 2-2-m extremal no-signaling box supported on outputs below k:
/// weight 1/k where (b - a) mod k == x*y. k == m gives P_m, and k == 2 the
/// PR box.
Behavior make_extremal_box(int m, int k);

/// The 2-m-2 extremal box: a xor b == 1 exactly when x == y != 0.
Behavior make_rtilde_box(int m);

/// Jones-type m1-m2-2 extremal box:
/// a xor b == [x==1 && y==1] + sum over (i,j) in q of [x==i && y==j] (mod 2).
Behavior make_jones_box(int m1, int m2, const std::vector<std::pair<int, int>>& q);

/// Deterministic local strategy a = alice[x], b = bob[y].
Behavior make_local_deterministic(const std::vector<int>& alice, int a_card,
                                  const std::vector<int>& bob, int b_card);

Behavior make_uniform_behavior(Scenario scenario);

/// The single-input single-output box; carries no correlation.
Behavior make_trivial_box();

/// weight * first + (1 - weight) * second. Modes must agree.
Behavior mix_behaviors(const Behavior& first, const Scalar& weight, const Behavior& second);

/// Product box. Composite labels flatten row-major with the first factor
/// most significant: x = x1 * x2_card + x2, and likewise for y, a, b.
Behavior tensor_behaviors(const Behavior& first, const Behavior& second);

Behavior convert(const Behavior& b, NumericMode mode);

Scalar bell_value(const Behavior& b, const BellFunctional& f);

/// Maximum of bell_value over the a_card^x_card * b_card^y_card
/// deterministic strategies. Throws LimitExceeded when that count exceeds
/// `limit`.
mpq_class local_bound(const BellFunctional& f, double limit = 1e8);

}  // namespace zerocap
