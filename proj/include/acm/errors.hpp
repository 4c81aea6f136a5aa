#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "acm/rational.hpp"

namespace acm {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad rank, r < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A value that must be an integer turned out fractional.
class NonIntegral : public Error {
 public:
  explicit NonIntegral(Rational value, const std::string& context = {});
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

/// No rank-two classification is available for this ambient degree.
class UnsupportedDegree : public Error {
 public:
  explicit UnsupportedDegree(int degree);
  int degree() const { return degree_; }

 private:
  int degree_;
};

class RankUnsupported : public Error {
 public:
  explicit RankUnsupported(int rank);
  int rank() const { return rank_; }

 private:
  int rank_;
};

/// Malformed catalog override file. `line()` is 1-based.
class CatalogParseError : public Error {
 public:
  CatalogParseError(std::string source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace acm
