#include "zerocap/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace zerocap {

namespace {

void require_same_mode(const Scalar& lhs, const Scalar& rhs, const char* op) {
  if (lhs.mode() != rhs.mode()) {
    throw ModeMismatch(std::string("mixed rational/floating operands in ") + op);
  }
}

}  // namespace

std::string_view to_string(NumericMode mode) {
  return mode == NumericMode::rational ? "rational" : "float";
}

NumericMode parse_mode(std::string_view text) {
  if (text == "rational") return NumericMode::rational;
  if (text == "float" || text == "floating") return NumericMode::floating;
  throw std::invalid_argument("unknown numeric mode: " + std::string(text));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, 1);
  q /= den;
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(mpq_class q) {
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::zero(NumericMode mode) {
  return mode == NumericMode::rational ? Scalar(mpq_class(0)) : Scalar(0.0);
}

Scalar Scalar::one(NumericMode mode) {
  return mode == NumericMode::rational ? Scalar(mpq_class(1)) : Scalar(1.0);
}

Scalar Scalar::parse(std::string_view text, NumericMode mode) {
  std::string s(text);
  if (mode == NumericMode::rational) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
      throw std::invalid_argument("not a rational literal: " + s);
    }
    return rational(std::move(q));
  }
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a number: " + s);
    q.canonicalize();
    return floating(q.get_d());
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + s);
  }
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return floating(v);
}

const mpq_class& Scalar::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw ModeMismatch("floating value used where a rational is required");
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::to_mode(NumericMode target) const {
  if (target == mode()) return *this;
  if (target == NumericMode::floating) return Scalar(to_double());
  // Exact binary value of the double.
  mpq_class q(std::get<double>(value_));
  q.canonicalize();
  return Scalar(std::move(q));
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<double>(value_) == 0.0;
}

bool Scalar::is_positive(double threshold) const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) > 0;
  return std::get<double>(value_) > threshold;
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  const double v = std::get<double>(value_);
  return (v > 0.0) - (v < 0.0);
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return q->get_num().get_str() + "/" + q->get_den().get_str();
  }
  std::ostringstream os;
  os << std::setprecision(17) << std::get<double>(value_);
  return os.str();
}

std::string Scalar::decimal(int significant_digits) const {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << to_double();
  return os.str();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_mode(*this, rhs, "+");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) += std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_mode(*this, rhs, "-");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_mode(*this, rhs, "*");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_mode(*this, rhs, "/");
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q /= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  return Scalar(-std::get<double>(value_));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  require_same_mode(lhs, rhs, "==");
  if (lhs.is_rational()) return lhs.as_rational() == rhs.as_rational();
  return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

bool operator<(const Scalar& lhs, const Scalar& rhs) {
  require_same_mode(lhs, rhs, "<");
  if (lhs.is_rational()) return lhs.as_rational() < rhs.as_rational();
  return std::get<double>(lhs.value_) < std::get<double>(rhs.value_);
}

Scalar clamp_probability(const Scalar& p) {
  if (p.is_rational()) return p;
  const double v = p.to_double();
  constexpr double kSlack = 1e-12;
  if (v < 0.0 && v >= -kSlack) return Scalar::floating(0.0);
  if (v > 1.0 && v <= 1.0 + kSlack) return Scalar::floating(1.0);
  return p;
}

NumericMode common_mode(const std::vector<Scalar>& values) {
  if (values.empty()) return NumericMode::rational;
  const NumericMode mode = values.front().mode();
  for (const auto& v : values) {
    if (v.mode() != mode) throw ModeMismatch("table mixes rational and floating entries");
  }
  return mode;
}

}  // namespace zerocap
