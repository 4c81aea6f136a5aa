#include "acm/chern.hpp"

#include <tuple>
#include <utility>

#include "acm/errors.hpp"

namespace acm {

namespace {

Rational frac(long long num, long long den) { return Rational(Integer(num), Integer(den)); }

// (r-5)^2 + (10 - 5r + r^2): twelve times the degree-2 Todd coefficient.
Integer todd2_numerator(const Integer& r) { return (r - 5) * (r - 5) + (10 - 5 * r + r * r); }

// r (5-r)(10-5r+r^2): twenty-four times chi(O_X).
Integer todd3_numerator(const Integer& r) { return r * (5 - r) * (10 - 5 * r + r * r); }

}  // namespace

HypersurfaceContext::HypersurfaceContext(int degree) : degree_(degree) {
  if (degree < 1) {
    throw InvalidArgument("hypersurface degree must be >= 1, got " + std::to_string(degree));
  }
}

BundleInvariants::BundleInvariants(int rank, Integer c1, Integer c2, Integer c3)
    : rank_(rank), c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1, got " + std::to_string(rank));
}

std::string BundleInvariants::str() const {
  return "(" + std::to_string(rank_) + ";" + c1_.str() + "," + c2_.str() + "," + c3_.str() + ")";
}

bool operator<(const BundleInvariants& a, const BundleInvariants& b) {
  return std::tie(a.rank_, a.c1_, a.c2_, a.c3_) < std::tie(b.rank_, b.c1_, b.c2_, b.c3_);
}

std::ostream& operator<<(std::ostream& os, const BundleInvariants& inv) { return os << inv.str(); }

CurveInvariants::CurveInvariants(Integer degree, Integer genus)
    : degree_(std::move(degree)), genus_(std::move(genus)) {
  if (degree_ < 1) throw InvalidArgument("curve degree must be >= 1, got " + degree_.str());
}

Rational chi_line_bundle(const HypersurfaceContext& ctx, const Integer& a) {
  const Integer r = ctx.degree();
  Rational chi = frac(1, 6) * Rational(a * a * a * r);
  chi += frac(1, 4) * Rational(a * a * r * (5 - r));
  chi += frac(1, 12) * Rational(a * r * todd2_numerator(r));
  chi += frac(1, 24) * Rational(todd3_numerator(r));
  return chi;
}

Rational chi_bundle(const HypersurfaceContext& ctx, const BundleInvariants& inv) {
  const Integer r = ctx.degree();
  const Integer k = inv.rank();
  const Integer& c1 = inv.c1();
  const Integer& c2 = inv.c2();
  const Integer& c3 = inv.c3();

  Rational chi = frac(1, 6) * Rational(r * c1 * c1 * c1);
  chi -= frac(1, 2) * Rational(c1 * c2);
  chi += frac(1, 2) * Rational(c3);
  chi += frac(1, 4) * Rational(r * c1 * c1 * (5 - r));
  chi -= frac(1, 2) * Rational(c2 * (5 - r));
  chi += frac(1, 12) * Rational(todd2_numerator(r) * c1 * r);
  chi += frac(1, 24) * Rational(k * todd3_numerator(r));
  return chi;
}

BundleInvariants twist(const HypersurfaceContext& ctx, const BundleInvariants& inv,
                       const Integer& n) {
  const Integer r = ctx.degree();
  const Integer k = inv.rank();
  const Integer& c1 = inv.c1();
  const Integer& c2 = inv.c2();

  Integer new_c1 = c1 + k * n;

  Rational c2_shift = Rational(r * n * (k - 1)) * (Rational(c1) + frac(1, 2) * Rational(n * k));
  Rational new_c2 = Rational(c2) + c2_shift;

  Rational inner = Rational(c2) + frac(1, 2) * Rational((k - 1) * n * r * c1) +
                   frac(1, 6) * Rational(r * n * n * k * (k - 1));
  Rational new_c3 = Rational(inv.c3()) + Rational((k - 2) * n) * inner;

  if (!new_c2.is_integer()) throw NonIntegral(new_c2, "twisted c2");
  if (!new_c3.is_integer()) throw NonIntegral(new_c3, "twisted c3");
  return BundleInvariants(inv.rank(), std::move(new_c1), new_c2.numerator(), new_c3.numerator());
}

Rational genus_general(const HypersurfaceContext& ctx, const BundleInvariants& inv) {
  if (inv.rank() < 2) {
    throw InvalidArgument("genus needs a bundle of rank >= 2, got rank " +
                          std::to_string(inv.rank()));
  }
  const Integer r = ctx.degree();
  const Integer& c1 = inv.c1();
  const Integer& c2 = inv.c2();

  Rational g = frac(-5, 2) * Rational(c2);
  g += frac(1, 2) * Rational(c1 * c2);
  g += frac(1, 2) * Rational(inv.c3());
  g += frac(25, 12) * Rational(r);
  g += frac(1, 2) * Rational(r * c2);
  g -= frac(35, 24) * Rational(r * r);
  g += frac(5, 12) * Rational(r * r * r);
  g -= frac(1, 24) * Rational(r * r * r * r);
  // The terms in r alone sum to chi(O_X) = 1 - binom(r-1, 4); restore the
  // constant 1 that 1 - chi(O_X) + chi(I_C) requires. Zero for r <= 4.
  g += frac(1, 24) * Rational((r - 1) * (r - 2) * (r - 3) * (r - 4));
  return g;
}

Rational genus_r4(const BundleInvariants& inv) {
  const Integer& c1 = inv.c1();
  const Integer& c2 = inv.c2();
  return Rational(1) + frac(1, 2) * Rational(c1 * c2 - c2 + inv.c3());
}

Integer require_integer(const Rational& x) {
  if (!x.is_integer()) throw NonIntegral(x);
  return x.numerator();
}

}  // namespace acm
