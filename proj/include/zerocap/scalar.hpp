#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zerocap {

enum class NumericMode { rational, floating };

std::string_view to_string(NumericMode mode);
NumericMode parse_mode(std::string_view text);

/// Raised when two values of different numeric modes meet in one operation.
/// Conversion between modes is always explicit (Scalar::to_mode).
class ModeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by searches and enumerations whose work estimate exceeds the
/// configured limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One constraint violation found by a validator.
struct Violation {
  std::string constraint;  // e.g. "normalization", "nonnegativity"
  std::string location;    // e.g. "x=0,y=1"
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

/// Probability-valued (or, for Bell values, signed) number in one of two
/// modes: an exact GMP rational or an IEEE double.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(long num, long den = 1);
  static Scalar rational(mpq_class q);
  static Scalar floating(double v) { return Scalar(v); }
  static Scalar zero(NumericMode mode);
  static Scalar one(NumericMode mode);

  /// Accepts "num/den", an integer, or (floating mode) a decimal literal.
  static Scalar parse(std::string_view text, NumericMode mode);

  NumericMode mode() const {
    return std::holds_alternative<mpq_class>(value_) ? NumericMode::rational
                                                     : NumericMode::floating;
  }
  bool is_rational() const { return mode() == NumericMode::rational; }

  const mpq_class& as_rational() const;
  double to_double() const;
  Scalar to_mode(NumericMode mode) const;

  bool is_zero() const;
  /// Strictly positive; floating values must exceed `threshold`.
  bool is_positive(double threshold = 1e-12) const;
  int sign() const;

  /// Rationals always render as "num/den" (so 1 is "1/1").
  std::string str() const;
  /// Decimal rendering with the given significant digits.
  std::string decimal(int significant_digits = 12) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact comparison; both operands must share a mode.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator<(const Scalar& lhs, const Scalar& rhs);
  friend bool operator>(const Scalar& lhs, const Scalar& rhs) { return rhs < lhs; }
  friend bool operator<=(const Scalar& lhs, const Scalar& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Scalar& lhs, const Scalar& rhs) { return !(lhs < rhs); }

 private:
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(double v) : value_(v) {}

  std::variant<mpq_class, double> value_;
};

/// Probability range check used by Behavior and Channel constructors.
/// Floating values within 1e-12 of [0,1] are clamped into it; anything else
/// is returned unchanged so validators can report it.
Scalar clamp_probability(const Scalar& p);

/// All entries share one mode; throws ModeMismatch otherwise. Empty input
/// defaults to rational.
NumericMode common_mode(const std::vector<Scalar>& values);

}  // namespace zerocap
