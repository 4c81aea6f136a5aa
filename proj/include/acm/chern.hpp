#pragma once

#include <ostream>
#include <string>

#include "acm/rational.hpp"

namespace acm {

/// A smooth hypersurface X_r of degree r in P^4.
///
/// Pic(X_r) is generated by the hyperplane class H, the canonical class is
/// (r-5)H and H^3 = r points. Every degree-normalized Chern number in this
/// library is measured against these intersection numbers.
class HypersurfaceContext {
 public:
  explicit HypersurfaceContext(int degree);

  int degree() const { return degree_; }
  /// Coefficient of H in the canonical class.
  int canonical_coefficient() const { return degree_ - 5; }
  /// Degree of H^3.
  int hyperplane_cube() const { return degree_; }

 private:
  int degree_;
};

/// Rank and degree-normalized Chern numbers (k; c1, c2, c3) of a bundle.
///
/// Only k >= 1 is enforced. Line bundles are not given an implicit (c2, c3)
/// convention; use chi_line_bundle for O(a).
class BundleInvariants {
 public:
  BundleInvariants(int rank, Integer c1, Integer c2, Integer c3);

  int rank() const { return rank_; }
  const Integer& c1() const { return c1_; }
  const Integer& c2() const { return c2_; }
  const Integer& c3() const { return c3_; }

  /// `(k;c1,c2,c3)`
  std::string str() const;

  friend bool operator==(const BundleInvariants&, const BundleInvariants&) = default;
  friend bool operator<(const BundleInvariants& a, const BundleInvariants& b);

 private:
  int rank_;
  Integer c1_;
  Integer c2_;
  Integer c3_;
};

std::ostream& operator<<(std::ostream& os, const BundleInvariants& inv);

/// Degree and arithmetic genus of a curve in X_r.
class CurveInvariants {
 public:
  CurveInvariants(Integer degree, Integer genus);

  const Integer& degree() const { return degree_; }
  const Integer& genus() const { return genus_; }

 private:
  Integer degree_;
  Integer genus_;
};

/// Euler characteristic of O_{X_r}(a) by Riemann-Roch.
Rational chi_line_bundle(const HypersurfaceContext& ctx, const Integer& a);

/// Euler characteristic of a rank-k bundle with the given Chern numbers.
Rational chi_bundle(const HypersurfaceContext& ctx, const BundleInvariants& inv);

/// Chern numbers of E(n) = E tensor O(n). Twisting is an action of Z:
/// twist(twist(E, m), n) == twist(E, m + n).
BundleInvariants twist(const HypersurfaceContext& ctx, const BundleInvariants& inv,
                       const Integer& n);

/// Arithmetic genus of the dependency curve of k-1 general sections, for
/// any degree r: 1 - chi(O_X) + chi(E(-c1)) - (k-1) chi(O(-c1)). Requires k >= 2.
Rational genus_general(const HypersurfaceContext& ctx, const BundleInvariants& inv);

/// The same genus specialised to the quartic: 1 + (c1 c2 - c2 + c3) / 2.
Rational genus_r4(const BundleInvariants& inv);

/// Returns the integer value of `x` or throws NonIntegral.
Integer require_integer(const Rational& x);

}  // namespace acm
