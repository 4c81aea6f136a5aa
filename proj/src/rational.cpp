#include "acm/rational.hpp"

#include <utility>

#include "acm/errors.hpp"

namespace acm {

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw DivisionByZero();
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DivisionByZero();
  Integer n = num_ * rhs.den_;
  Integer d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // denominators are positive, so cross-multiplication preserves order
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(const std::string& text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw InvalidArgument("not an integer: '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw InvalidArgument("not an integer: '" + text + "'");
  }
  Integer value(text.substr(pos));
  return text[0] == '-' ? Integer(-value) : value;
}

NonIntegral::NonIntegral(Rational value, const std::string& context)
    : Error("non-integral value " + value.str() + (context.empty() ? "" : " in " + context)),
      value_(std::move(value)) {}

UnsupportedDegree::UnsupportedDegree(int degree)
    : Error("unsupported degree r=" + std::to_string(degree) +
            ": no rank-two ACM catalog is available"),
      degree_(degree) {}

RankUnsupported::RankUnsupported(int rank)
    : Error("unsupported rank k=" + std::to_string(rank) +
            ": only rank-four targets split into two rank-two pieces"),
      rank_(rank) {}

CatalogParseError::CatalogParseError(std::string source, std::size_t line, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

}  // namespace acm
