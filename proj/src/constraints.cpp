#include "acm/constraints.hpp"

#include <algorithm>

#include "acm/errors.hpp"

namespace acm {

namespace {

Rational frac(long long num, long long den) { return Rational(Integer(num), Integer(den)); }

Integer floor_of(const Rational& q) {
  Integer quotient = q.numerator() / q.denominator();  // truncates toward zero
  if (q.numerator() < 0 && quotient * q.denominator() != q.numerator()) quotient -= 1;
  return quotient;
}

void require_rank_at_least_two(int rank) {
  if (rank < 2) throw InvalidArgument("rank must be >= 2, got " + std::to_string(rank));
}

struct Clause {
  Integer value;
  BoundTag tag;
};

// Picks the extremal clause value; ties contribute every tag.
void combine(const std::vector<Clause>& clauses, bool take_max, Integer& value,
             std::vector<BoundTag>& tags) {
  value = clauses.front().value;
  for (const Clause& c : clauses) {
    if (take_max ? c.value > value : c.value < value) value = c.value;
  }
  tags.clear();
  for (const Clause& c : clauses) {
    if (c.value == value && std::find(tags.begin(), tags.end(), c.tag) == tags.end()) {
      tags.push_back(c.tag);
    }
  }
}

}  // namespace

std::string to_string(BoundTag tag) {
  switch (tag) {
    case BoundTag::Projection: return "projection";
    case BoundTag::HyperplaneSection: return "hyperplane-section";
    case BoundTag::EulerCharacteristic: return "euler-characteristic";
    case BoundTag::Bilinear: return "bilinear";
    case BoundTag::RankThreeDual: return "rank3-dual";
    case BoundTag::LinearCurve: return "c1-one";
  }
  return "unknown";
}

std::vector<Integer> C2Interval::points() const {
  std::vector<Integer> out;
  for (Integer c2 = lower; c2 <= upper; ++c2) out.push_back(c2);
  return out;
}

bool is_refined_rank(int rank) { return rank == 3 || rank == 4; }

std::pair<Integer, Integer> c1_bounds(const HypersurfaceContext& ctx, int rank) {
  require_rank_at_least_two(rank);
  return {Integer(1), floor_of(Rational(Integer(rank) * (ctx.degree() - 1), Integer(2)))};
}

GeneralC2Bound c2_upper_general(const HypersurfaceContext& ctx, int rank, const Integer& c1) {
  require_rank_at_least_two(rank);
  if (c1 < 1) throw InvalidArgument("c1 must be >= 1, got " + c1.str());
  const Integer r = ctx.degree();
  Rational bound = Rational(r, Integer(2)) * Rational(c1 * c1) -
                   Rational(r * (r - 2), Integer(2)) * Rational(c1) +
                   Rational(r * (r - 1) * (r - 2), Integer(6)) * Rational(Integer(rank));
  return {floor_of(bound), !bound.is_integer()};
}

Integer c3_from_acm(int rank, const Integer& c1, const Integer& c2) {
  Rational c3 = frac(-4, 3) * Rational(c1 * c1 * c1) + Rational(2 * c1 * c1) -
                frac(14, 3) * Rational(c1) + Rational(c1 * c2 - c2 + 2 * rank);
  if (!c3.is_integer()) throw NonIntegral(c3, "c3 on the quartic");
  return c3.numerator();
}

Integer genus_from_acm(int rank, const Integer& c1, const Integer& c2) {
  Rational g = frac(-2, 3) * Rational(c1 * c1 * c1) + Rational(c1 * c1) -
               frac(7, 3) * Rational(c1) + Rational(1 + (c1 - 1) * c2 + rank);
  if (!g.is_integer()) throw NonIntegral(g, "genus on the quartic");
  return g.numerator();
}

C2Interval c2_interval_r4(int rank, const Integer& c1) {
  require_rank_at_least_two(rank);
  const Integer k = rank;
  const Integer sq = 2 * c1 * c1;

  std::vector<Clause> lowers{{sq - 2 * c1 + k, BoundTag::Projection}};
  std::vector<Clause> uppers{{sq - 4 * c1 + 4 * k, BoundTag::HyperplaneSection},
                             {sq + k, BoundTag::EulerCharacteristic}};

  const bool refined = is_refined_rank(rank);
  if (refined && c1 > 1) lowers.push_back({sq - 4 * c1 + 8, BoundTag::Bilinear});
  if (refined && rank == 3 && c1 >= 3) {
    lowers.push_back({sq - 4 * c1 + 11, BoundTag::RankThreeDual});
    uppers.push_back({sq - 4 * c1 + 12, BoundTag::RankThreeDual});
  }

  C2Interval out;
  combine(lowers, true, out.lower, out.lower_tags);
  combine(uppers, false, out.upper, out.upper_tags);

  if (refined && c1 == 1) {
    out.lower = out.upper = k + 2;
    out.lower_tags = out.upper_tags = {BoundTag::LinearCurve};
  }
  return out;
}

std::vector<EnumerationRow> enumerate_acm_r4(int rank) {
  const auto [c1_min, c1_max] = c1_bounds(HypersurfaceContext(4), rank);
  std::vector<EnumerationRow> rows;
  for (Integer c1 = c1_min; c1 <= c1_max; ++c1) {
    EnumerationRow row;
    row.rank = rank;
    row.c1 = c1;
    row.interval = c2_interval_r4(rank, c1);
    row.refined = is_refined_rank(rank);
    for (const Integer& c2 : row.interval.points()) {
      row.points.push_back({c2, c3_from_acm(rank, c1, c2), genus_from_acm(rank, c1, c2)});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool hs_sufficient_condition(const HypersurfaceContext& ctx, const Integer& c1,
                             const CurveInvariants& curve) {
  return 2 * curve.genus() - 2 < (ctx.degree() + c1 - 4) * curve.degree();
}

}  // namespace acm
