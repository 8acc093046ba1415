#include "zerocap/behaviors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zerocap {

namespace {

std::string xy_location(int x, int y) {
  return "x=" + std::to_string(x) + ",y=" + std::to_string(y);
}

void check_index(const Scenario& s, int x, int y, int a, int b) {
  if (!s.contains(x, y, a, b)) {
    std::ostringstream os;
    os << "behavior index out of range: (x,y,a,b)=(" << x << "," << y << "," << a << "," << b
       << ")";
    throw std::out_of_range(os.str());
  }
}

}  // namespace

void Scenario::check() const {
  if (x_card < 1 || y_card < 1 || a_card < 1 || b_card < 1) {
    throw std::invalid_argument("scenario cardinalities must be at least 1");
  }
}

Behavior::Behavior(Scenario scenario, std::vector<Scalar> table)
    : scenario_(scenario), mode_(common_mode(table)), table_(std::move(table)) {
  scenario_.check();
  if (table_.size() != scenario_.size()) {
    throw std::invalid_argument("behavior table size " + std::to_string(table_.size()) +
                                " does not match scenario size " +
                                std::to_string(scenario_.size()));
  }
  for (auto& p : table_) p = clamp_probability(p);
}

const Scalar& Behavior::at(int x, int y, int a, int b) const {
  check_index(scenario_, x, y, a, b);
  return (*this)(x, y, a, b);
}

bool operator==(const Behavior& lhs, const Behavior& rhs) {
  if (lhs.scenario_ != rhs.scenario_ || lhs.mode_ != rhs.mode_) return false;
  return std::equal(lhs.table_.begin(), lhs.table_.end(), rhs.table_.begin());
}

BellFunctional::BellFunctional(Scenario scenario, std::vector<mpq_class> coefficients)
    : scenario_(scenario), coefficients_(std::move(coefficients)) {
  scenario_.check();
  if (coefficients_.size() != scenario_.size()) {
    throw std::invalid_argument("Bell functional shape does not match its scenario");
  }
}

BellFunctional BellFunctional::zero(Scenario scenario) {
  return BellFunctional(scenario, std::vector<mpq_class>(scenario.size()));
}

ValidationReport validate_behavior(const Behavior& b) {
  ValidationReport report;
  const auto& s = b.scenario();
  const bool exact = b.mode() == NumericMode::rational;
  const Scalar zero = Scalar::zero(b.mode());
  const Scalar one = Scalar::one(b.mode());
  for (int x = 0; x < s.x_card; ++x) {
    for (int y = 0; y < s.y_card; ++y) {
      Scalar sum = zero;
      for (int a = 0; a < s.a_card; ++a) {
        for (int bo = 0; bo < s.b_card; ++bo) {
          const Scalar& p = b(x, y, a, bo);
          const std::string where =
              xy_location(x, y) + ",a=" + std::to_string(a) + ",b=" + std::to_string(bo);
          if (p < zero) report.push_back({"nonnegativity", where, p.str()});
          if (p > one) report.push_back({"range", where, p.str()});
          sum += p;
        }
      }
      const bool normalized =
          exact ? sum == one : std::abs(sum.to_double() - 1.0) <= 1e-9;
      if (!normalized) {
        report.push_back({"normalization", xy_location(x, y), "sum=" + sum.str()});
      }
    }
  }
  return report;
}

Scalar marginal_alice(const Behavior& b, int x, int a, int y) {
  check_index(b.scenario(), x, y, a, 0);
  Scalar sum = Scalar::zero(b.mode());
  for (int bo = 0; bo < b.scenario().b_card; ++bo) sum += b(x, y, a, bo);
  return sum;
}

Scalar marginal_bob(const Behavior& b, int y, int b_out, int x) {
  check_index(b.scenario(), x, y, 0, b_out);
  Scalar sum = Scalar::zero(b.mode());
  for (int a = 0; a < b.scenario().a_card; ++a) sum += b(x, y, a, b_out);
  return sum;
}

std::optional<Scalar> conditional_bob(const Behavior& b, int y, int b_out, int x, int a) {
  check_index(b.scenario(), x, y, a, b_out);
  const Scalar denom = marginal_alice(b, x, a, y);
  if (!denom.is_positive(0.0)) return std::nullopt;
  return b(x, y, a, b_out) / denom;
}

SignalingCheck is_no_signaling(const Behavior& b, double tol) {
  const auto& s = b.scenario();
  const bool exact = b.mode() == NumericMode::rational;
  SignalingCheck result;
  auto record = [&](const Scalar& lhs, const Scalar& rhs) {
    const Scalar diff = lhs - rhs;
    const double magnitude = std::abs(diff.to_double());
    result.max_violation = std::max(result.max_violation, magnitude);
    if (exact ? !diff.is_zero() : magnitude > tol) result.no_signaling = false;
  };
  for (int x = 0; x < s.x_card; ++x) {
    for (int a = 0; a < s.a_card; ++a) {
      const Scalar reference = marginal_alice(b, x, a, 0);
      for (int y = 1; y < s.y_card; ++y) record(marginal_alice(b, x, a, y), reference);
    }
  }
  for (int y = 0; y < s.y_card; ++y) {
    for (int bo = 0; bo < s.b_card; ++bo) {
      const Scalar reference = marginal_bob(b, y, bo, 0);
      for (int x = 1; x < s.x_card; ++x) record(marginal_bob(b, y, bo, x), reference);
    }
  }
  return result;
}

Behavior make_extremal_box(int m, int k) {
  if (k < 2 || k > m) {
    throw std::invalid_argument("extremal box needs 2 <= k <= m (got m=" + std::to_string(m) +
                                ", k=" + std::to_string(k) + ")");
  }
  const Scenario s{2, 2, m, m};
  std::vector<Scalar> table(s.size(), Scalar::zero(NumericMode::rational));
  const Scalar weight = Scalar::rational(1, k);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (((b - a) % k + k) % k == x * y) table[s.index(x, y, a, b)] = weight;
        }
      }
    }
  }
  return Behavior(s, std::move(table));
}

Behavior make_rtilde_box(int m) {
  if (m < 2) throw std::invalid_argument("R~ box needs m >= 2");
  const Scenario s{m, m, 2, 2};
  std::vector<Scalar> table(s.size(), Scalar::zero(NumericMode::rational));
  const Scalar half = Scalar::rational(1, 2);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int parity = (x == y && x != 0) ? 1 : 0;
      for (int a = 0; a < 2; ++a) table[s.index(x, y, a, a ^ parity)] = half;
    }
  }
  return Behavior(s, std::move(table));
}

Behavior make_jones_box(int m1, int m2, const std::vector<std::pair<int, int>>& q) {
  if (m1 < 2 || m2 < 2) throw std::invalid_argument("Jones box needs m1, m2 >= 2");
  for (const auto& [i, j] : q) {
    if (i == 1 && j == 1) throw std::invalid_argument("Jones box set Q may not contain (1,1)");
    if (i < 1 || i >= m1 || j < 1 || j >= m2) {
      throw std::invalid_argument("Jones box pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range");
    }
  }
  const Scenario s{m1, m2, 2, 2};
  std::vector<Scalar> table(s.size(), Scalar::zero(NumericMode::rational));
  const Scalar half = Scalar::rational(1, 2);
  for (int x = 0; x < m1; ++x) {
    for (int y = 0; y < m2; ++y) {
      int parity = (x == 1 && y == 1) ? 1 : 0;
      for (const auto& [i, j] : q) parity += (x == i && y == j) ? 1 : 0;
      parity %= 2;
      for (int a = 0; a < 2; ++a) table[s.index(x, y, a, a ^ parity)] = half;
    }
  }
  return Behavior(s, std::move(table));
}

Behavior make_local_deterministic(const std::vector<int>& alice, int a_card,
                                  const std::vector<int>& bob, int b_card) {
  const Scenario s{static_cast<int>(alice.size()), static_cast<int>(bob.size()), a_card, b_card};
  s.check();
  for (int v : alice) {
    if (v < 0 || v >= a_card) throw std::invalid_argument("Alice's map leaves the output range");
  }
  for (int v : bob) {
    if (v < 0 || v >= b_card) throw std::invalid_argument("Bob's map leaves the output range");
  }
  std::vector<Scalar> table(s.size(), Scalar::zero(NumericMode::rational));
  for (int x = 0; x < s.x_card; ++x) {
    for (int y = 0; y < s.y_card; ++y) {
      table[s.index(x, y, alice[x], bob[y])] = Scalar::one(NumericMode::rational);
    }
  }
  return Behavior(s, std::move(table));
}

Behavior make_uniform_behavior(Scenario s) {
  s.check();
  return Behavior(s, std::vector<Scalar>(s.size(), Scalar::rational(1, long(s.a_card) * s.b_card)));
}

Behavior make_trivial_box() {
  return Behavior(Scenario{1, 1, 1, 1}, {Scalar::one(NumericMode::rational)});
}

Behavior mix_behaviors(const Behavior& first, const Scalar& weight, const Behavior& second) {
  if (first.scenario() != second.scenario()) {
    throw std::invalid_argument("cannot mix behaviors of different scenarios");
  }
  if (first.mode() != second.mode() || weight.mode() != first.mode()) {
    throw ModeMismatch("mixing behaviors requires a common numeric mode");
  }
  const Scalar rest = Scalar::one(weight.mode()) - weight;
  std::vector<Scalar> table;
  table.reserve(first.table().size());
  for (std::size_t i = 0; i < first.table().size(); ++i) {
    table.push_back(weight * first.table()[i] + rest * second.table()[i]);
  }
  return Behavior(first.scenario(), std::move(table));
}

Behavior tensor_behaviors(const Behavior& first, const Behavior& second) {
  if (first.mode() != second.mode()) {
    throw ModeMismatch("tensor product of behaviors in different numeric modes");
  }
  const Scenario& s1 = first.scenario();
  const Scenario& s2 = second.scenario();
  const Scenario s{s1.x_card * s2.x_card, s1.y_card * s2.y_card, s1.a_card * s2.a_card,
                   s1.b_card * s2.b_card};
  std::vector<Scalar> table(s.size(), Scalar::zero(first.mode()));
  for (int x1 = 0; x1 < s1.x_card; ++x1)
    for (int x2 = 0; x2 < s2.x_card; ++x2)
      for (int y1 = 0; y1 < s1.y_card; ++y1)
        for (int y2 = 0; y2 < s2.y_card; ++y2)
          for (int a1 = 0; a1 < s1.a_card; ++a1)
            for (int a2 = 0; a2 < s2.a_card; ++a2)
              for (int b1 = 0; b1 < s1.b_card; ++b1)
                for (int b2 = 0; b2 < s2.b_card; ++b2) {
                  table[s.index(x1 * s2.x_card + x2, y1 * s2.y_card + y2, a1 * s2.a_card + a2,
                                b1 * s2.b_card + b2)] =
                      first(x1, y1, a1, b1) * second(x2, y2, a2, b2);
                }
  return Behavior(s, std::move(table));
}

Behavior convert(const Behavior& b, NumericMode mode) {
  std::vector<Scalar> table;
  table.reserve(b.table().size());
  for (const auto& p : b.table()) table.push_back(p.to_mode(mode));
  return Behavior(b.scenario(), std::move(table));
}

Scalar bell_value(const Behavior& b, const BellFunctional& f) {
  if (b.scenario() != f.scenario()) {
    throw std::invalid_argument("Bell functional and behavior have different scenarios");
  }
  const auto& s = b.scenario();
  Scalar value = Scalar::zero(b.mode());
  for (int x = 0; x < s.x_card; ++x)
    for (int y = 0; y < s.y_card; ++y)
      for (int a = 0; a < s.a_card; ++a)
        for (int bo = 0; bo < s.b_card; ++bo) {
          const mpq_class& c = f(x, y, a, bo);
          if (sgn(c) == 0) continue;
          value += Scalar::rational(c).to_mode(b.mode()) * b(x, y, a, bo);
        }
  return value;
}

mpq_class local_bound(const BellFunctional& f, double limit) {
  const auto& s = f.scenario();
  const double count =
      std::pow(double(s.a_card), s.x_card) * std::pow(double(s.b_card), s.y_card);
  if (count > limit) {
    throw LimitExceeded("local_bound: " + std::to_string(count) +
                        " deterministic strategies exceed the limit");
  }
  // Enumerate Alice's deterministic maps; for each one Bob's best response
  // decouples over y, which equals the maximum over all of Bob's maps.
  std::vector<int> alice(s.x_card, 0);
  bool first = true;
  mpq_class best;
  while (true) {
    mpq_class total = 0;
    for (int y = 0; y < s.y_card; ++y) {
      mpq_class best_b;
      for (int bo = 0; bo < s.b_card; ++bo) {
        mpq_class column = 0;
        for (int x = 0; x < s.x_card; ++x) column += f(x, y, alice[x], bo);
        if (bo == 0 || column > best_b) best_b = column;
      }
      total += best_b;
    }
    if (first || total > best) best = total;
    first = false;
    int pos = 0;
    while (pos < s.x_card && ++alice[pos] == s.a_card) alice[pos++] = 0;
    if (pos == s.x_card) break;
  }
  return best;
}

}  // namespace zerocap
