#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acm/chern.hpp"
#include "acm/rational.hpp"

namespace acm {

/// Which inequality fixed an endpoint of a c2 interval on the quartic.
enum class BoundTag {
  Projection,          // lower: 2c1^2 - 2c1 + k, splitting of the push-forward to P^3
  HyperplaneSection,   // upper: 2c1^2 - 4c1 + 4k, chi of the restriction to a hyperplane
  EulerCharacteristic, // upper: 2c1^2 + k, from chi(E) >= k
  Bilinear,            // lower: 2c1^2 - 4c1 + 8 when c1 > 1
  RankThreeDual,       // rank 3, c1 >= 3: 2c1^2 - 4c1 + 11 <= c2 <= 2c1^2 - 4c1 + 12
  LinearCurve,         // c1 = 1: c2 = k + 2 exactly
};

std::string to_string(BoundTag tag);

/// Closed integer interval [lower, upper] of admissible c2; empty when
/// lower > upper. The tag lists record every clause attaining each endpoint.
struct C2Interval {
  Integer lower;
  Integer upper;
  std::vector<BoundTag> lower_tags;
  std::vector<BoundTag> upper_tags;

  bool empty() const { return lower > upper; }
  Integer size() const { return empty() ? Integer(0) : Integer(upper - lower + 1); }
  bool contains(const Integer& c2) const { return lower <= c2 && c2 <= upper; }
  /// Integer points in ascending order.
  std::vector<Integer> points() const;
};

/// Upper bound on c2 valid for every degree r. `floored` is set when the
/// rational bound was not an integer and had to be rounded down.
struct GeneralC2Bound {
  Integer value;
  bool floored = false;
};

struct AcmPoint {
  Integer c2;
  Integer c3;
  Integer genus;
};

/// One row of the classification table: fixed (k, c1) and every admissible c2.
struct EnumerationRow {
  int rank = 0;
  Integer c1;
  C2Interval interval;
  std::vector<AcmPoint> points;  // one per integer in `interval`, ascending
  /// False outside k in {3, 4}, where only the general quartic bounds apply.
  bool refined = true;

  bool empty() const { return interval.empty(); }
  BundleInvariants invariants(const AcmPoint& p) const { return {rank, c1, p.c2, p.c3}; }
};

/// Admissible range of c1 for a rank-k bundle: [1, floor(k(r-1)/2)].
std::pair<Integer, Integer> c1_bounds(const HypersurfaceContext& ctx, int rank);

GeneralC2Bound c2_upper_general(const HypersurfaceContext& ctx, int rank, const Integer& c1);

/// c3 forced on the quartic by chi(E(-1)) = 0.
Integer c3_from_acm(int rank, const Integer& c1, const Integer& c2);

/// Genus of the dependency curve on the quartic once c3 is eliminated.
Integer genus_from_acm(int rank, const Integer& c1, const Integer& c2);

/// Intersection of all applicable c2 bounds on the quartic.
///
/// Lower bounds combine by max and upper bounds by min. For k in {3, 4} the
/// c1 > 1 lower bound and the rank-three refinement apply, and c1 = 1 replaces
/// the interval by the single point k + 2.
C2Interval c2_interval_r4(int rank, const Integer& c1);

/// Every admissible (c1, c2, c3, g) on the quartic for the given rank, by
/// ascending c1 then c2. Empty rows are kept.
std::vector<EnumerationRow> enumerate_acm_r4(int rank);

bool is_refined_rank(int rank);

/// 2g - 2 < (r + c1 - 4) deg C, which guarantees h^0 omega_C(4 - r - c1) = 0.
bool hs_sufficient_condition(const HypersurfaceContext& ctx, const Integer& c1,
                             const CurveInvariants& curve);

}  // namespace acm
