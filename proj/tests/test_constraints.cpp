#include <doctest.h>

#include <algorithm>
#include <set>

#include "acm/constraints.hpp"
#include "acm/errors.hpp"
#include "oracle.hpp"

using acm::BoundTag;
using acm::BundleInvariants;
using acm::HypersurfaceContext;
using acm::Integer;

namespace {

const HypersurfaceContext kQuartic(4);

bool has_tag(const std::vector<BoundTag>& tags, BoundTag t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

}  // namespace

TEST_SUITE("constraints") {
  TEST_CASE("c1 bounds") {
    CHECK(acm::c1_bounds(kQuartic, 4) == std::pair<Integer, Integer>(1, 6));
    CHECK(acm::c1_bounds(kQuartic, 3) == std::pair<Integer, Integer>(1, 4));
    CHECK(acm::c1_bounds(HypersurfaceContext(3), 2) == std::pair<Integer, Integer>(1, 2));
    CHECK_THROWS_AS(acm::c1_bounds(kQuartic, 1), acm::InvalidArgument);
  }

  TEST_CASE("general c2 upper bound") {
    CHECK(acm::c2_upper_general(kQuartic, 4, 3).value == 22);
    CHECK(acm::c2_upper_general(kQuartic, 3, 2).value == 12);
    CHECK(acm::c2_upper_general(HypersurfaceContext(3), 2, 2).value == 5);
    CHECK_FALSE(acm::c2_upper_general(kQuartic, 4, 3).floored);
    CHECK_THROWS_AS(acm::c2_upper_general(kQuartic, 4, 0), acm::InvalidArgument);
  }

  TEST_CASE("general c2 upper bound is integral for every integer input") {
    // r c1 (c1 - r + 2) is always even and r(r-1)(r-2)/6 is an integer,
    // so the floor flag never fires on integer data.
    for (int r = 1; r <= 12; ++r) {
      for (int k = 2; k <= 8; ++k) {
        for (int c1 = 1; c1 <= 20; ++c1) {
          CHECK_FALSE(acm::c2_upper_general(HypersurfaceContext(r), k, c1).floored);
        }
      }
    }
  }

  TEST_CASE("c3 and genus on the quartic") {
    CHECK(acm::c3_from_acm(3, 1, 5) == 2);
    CHECK(acm::c3_from_acm(4, 6, 64) == 84);
    for (int c2 = 16; c2 <= 22; ++c2) CHECK(acm::c3_from_acm(4, 3, c2) == 2 * c2 - 24);
    CHECK(acm::genus_from_acm(4, 1, 6) == 3);
    CHECK(acm::genus_from_acm(3, 2, 8) == 6);
    CHECK(acm::genus_from_acm(4, 5, 46) == 119);
    CHECK(acm::genus_from_acm(4, 6, 64) == 5 * 64 - 117);
  }

  TEST_CASE("c3 and genus are integral for all integer inputs") {
    for (int k = 1; k <= 10; ++k) {
      for (int c1 = -30; c1 <= 30; ++c1) {
        for (int c2 = -20; c2 <= 20; c2 += 7) {
          CHECK_NOTHROW(acm::c3_from_acm(k, c1, c2));
          CHECK_NOTHROW(acm::genus_from_acm(k, c1, c2));
        }
      }
    }
  }

  TEST_CASE("eliminated c3 makes chi(E(-1)) vanish and fixes chi(E)") {
    acm::oracle::Sampler s;
    for (int i = 0; i < 1000; ++i) {
      const int k = s.uniform(2, 8);
      const Integer c1 = s.uniform(-10, 10);
      const Integer c2 = s.uniform(-200, 200);
      const BundleInvariants e(k, c1, c2, acm::c3_from_acm(k, c1, c2));
      CHECK(acm::oracle::chi(4, acm::oracle::twist(4, e, -1)) == 0);
      CHECK(acm::oracle::chi(4, e) == acm::Rational(-c2 + 2 * c1 * c1 + 2 * k));
      CHECK(acm::genus_r4(e) == acm::Rational(acm::genus_from_acm(k, c1, c2)));
    }
  }

  TEST_CASE("c2 intervals") {
    auto check_iv = [](int k, int c1, int lo, int hi) {
      const auto iv = acm::c2_interval_r4(k, c1);
      CHECK(iv.lower == lo);
      CHECK(iv.upper == hi);
    };
    check_iv(4, 2, 8, 12);
    check_iv(3, 3, 17, 18);
    check_iv(4, 6, 64, 64);
    check_iv(3, 1, 5, 5);
  }

  TEST_CASE("interval provenance") {
    const auto linear = acm::c2_interval_r4(4, 1);
    CHECK(linear.lower_tags == std::vector<BoundTag>{BoundTag::LinearCurve});

    const auto rank3 = acm::c2_interval_r4(3, 3);
    CHECK(has_tag(rank3.lower_tags, BoundTag::RankThreeDual));
    CHECK(has_tag(rank3.upper_tags, BoundTag::RankThreeDual));
    CHECK(has_tag(rank3.upper_tags, BoundTag::HyperplaneSection));

    // k=4, c1=2: both the projection and bilinear lower bounds equal 8
    const auto tie = acm::c2_interval_r4(4, 2);
    CHECK(has_tag(tie.lower_tags, BoundTag::Projection));
    CHECK(has_tag(tie.lower_tags, BoundTag::Bilinear));
    CHECK(tie.upper_tags == std::vector<BoundTag>{BoundTag::EulerCharacteristic});

    const auto unrefined = acm::c2_interval_r4(2, 1);
    CHECK(unrefined.lower == 2);
    CHECK(unrefined.upper == 4);
  }

  TEST_CASE("empty intervals are representable") {
    acm::C2Interval iv{5, 4, {}, {}};
    CHECK(iv.empty());
    CHECK(iv.size() == 0);
    CHECK(iv.points().empty());
    // beyond the c1 range the bounds cross
    CHECK(acm::c2_interval_r4(4, 7).empty());
  }

  TEST_CASE("intervals equal a brute-force scan of the inequalities") {
    for (int k = 2; k <= 8; ++k) {
      for (int c1 = -3; c1 <= 14; ++c1) {
        const auto iv = acm::c2_interval_r4(k, c1);
        for (int c2 = -50; c2 <= 500; ++c2) {
          CHECK_MESSAGE(iv.contains(c2) == acm::oracle::admissible_r4(k, c1, c2),
                        "k=" << k << " c1=" << c1 << " c2=" << c2);
        }
      }
    }
  }

  TEST_CASE("upper endpoints respect the general bound") {
    for (int k = 2; k <= 8; ++k) {
      const auto [lo, hi] = acm::c1_bounds(kQuartic, k);
      for (Integer c1 = lo; c1 <= hi; ++c1) {
        CHECK(acm::c2_interval_r4(k, c1).upper <= acm::c2_upper_general(kQuartic, k, c1).value);
      }
    }
  }

  TEST_CASE("enumeration of rank three and four") {
    const auto rank3 = acm::enumerate_acm_r4(3);
    REQUIRE(rank3.size() == 4);
    CHECK(rank3.front().points.size() == 1);
    CHECK(rank3.front().points.front().c3 == 2);
    CHECK(rank3.front().points.front().genus == 2);
    CHECK(rank3.back().interval.lower == 27);
    CHECK(rank3.back().interval.upper == 28);

    const auto rank4 = acm::enumerate_acm_r4(4);
    REQUIRE(rank4.size() == 6);
    std::size_t total = 0;
    for (const auto& row : rank4) {
      CHECK(row.refined);
      total += row.points.size();
      for (std::size_t i = 0; i + 1 < row.points.size(); ++i) {
        CHECK(row.points[i].c2 + 1 == row.points[i + 1].c2);
      }
    }
    CHECK(total == 22);
    CHECK(rank4.back().points.front().genus == 203);
  }

  TEST_CASE("unrefined rank two contains the star rank-two classes") {
    const auto rows = acm::enumerate_acm_r4(2);
    std::set<std::pair<Integer, Integer>> admissible;
    for (const auto& row : rows) {
      CHECK_FALSE(row.refined);
      for (const auto& p : row.points) admissible.insert({row.c1, p.c2});
    }
    for (auto [c1, c2] : {std::pair{1, 3}, {1, 4}, {2, 8}, {3, 14}}) {
      CHECK(admissible.count({c1, c2}) == 1);
    }
  }

  TEST_CASE("every enumerated point satisfies the brute-force predicate") {
    for (int k = 2; k <= 7; ++k) {
      for (const auto& row : acm::enumerate_acm_r4(k)) {
        for (const auto& p : row.points) CHECK(acm::oracle::admissible_r4(k, row.c1, p.c2));
      }
    }
  }

  TEST_CASE("sufficient condition for the curve criterion") {
    CHECK(acm::hs_sufficient_condition(kQuartic, 1, acm::CurveInvariants(6, 3)));
    CHECK(acm::hs_sufficient_condition(kQuartic, 1, acm::CurveInvariants(5, 2)));
    CHECK_FALSE(acm::hs_sufficient_condition(kQuartic, 0, acm::CurveInvariants(5, 3)));
    // strict: 2g - 2 == (r + c1 - 4) deg fails
    CHECK_FALSE(acm::hs_sufficient_condition(kQuartic, 1, acm::CurveInvariants(4, 3)));
  }
}
