#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace acm {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                               boost::multiprecision::et_off>;

/// Exact fraction over arbitrary-precision integers.
///
/// Always kept in lowest terms with a strictly positive denominator, so two
/// equal values have identical representations.
class Rational {
 public:
  Rational() = default;
  Rational(const Integer& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : num_(value) {}       // NOLINT(google-explicit-constructor)
  Rational(int value) : num_(value) {}             // NOLINT(google-explicit-constructor)
  Rational(Integer numerator, Integer denominator);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// `p/q`, or bare `p` when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Decimal rendering of an arbitrary-precision integer.
std::string to_string(const Integer& value);

/// Parses an optionally signed decimal integer; throws InvalidArgument.
Integer parse_integer(const std::string& text);

}  // namespace acm
