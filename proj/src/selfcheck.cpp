#include "acm/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include "acm/errors.hpp"

namespace acm {

namespace {

// Q[h]/(h^4): rational Chow ring of X_r with deg(h^3) = r.
struct Truncated {
  std::array<Rational, 4> c{};

  friend Truncated operator+(Truncated a, const Truncated& b) {
    for (int i = 0; i < 4; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Truncated operator*(const Truncated& a, const Truncated& b) {
    Truncated out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; i + j < 4; ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
  }
  friend Truncated operator*(const Rational& s, Truncated a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
};

Truncated graded(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3) {
  Truncated t;
  t.c = {c0, c1, c2, c3};
  return t;
}

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

// Total Chern class of a bundle whose degree-normalized numbers are given.
Truncated total_chern(int r, const Integer& c1, const Integer& c2, const Integer& c3) {
  return graded(1, c1, Rational(c2, r), Rational(c3, r));
}

Truncated todd_class(int r) {
  // c(T_X) = (1 + h)^5 / (1 + r h)
  Truncated one_plus_h = graded(1, 1, 0, 0);
  Truncated ambient = graded(1, 0, 0, 0);
  for (int i = 0; i < 5; ++i) ambient = ambient * one_plus_h;
  Truncated normal_inverse = graded(1, -r, Integer(r) * r, -Integer(r) * r * r);
  Truncated tx = ambient * normal_inverse;
  const Truncated t1 = graded(0, tx.c[1], 0, 0);
  const Truncated t2 = graded(0, 0, tx.c[2], 0);
  return graded(1, 0, 0, 0) + q(1, 2) * t1 + q(1, 12) * (t1 * t1 + t2) + q(1, 24) * (t1 * t2);
}

Rational hrr_chi(int r, const BundleInvariants& inv) {
  Truncated c = total_chern(r, inv.c1(), inv.c2(), inv.c3());
  const Truncated x1 = graded(0, c.c[1], 0, 0);
  const Truncated x2 = graded(0, 0, c.c[2], 0);
  const Truncated x3 = graded(0, 0, 0, c.c[3]);
  Truncated ch = graded(inv.rank(), 0, 0, 0) + x1 + q(1, 2) * (x1 * x1 + q(-2) * x2) +
                 q(1, 6) * (x1 * x1 * x1 + q(-3) * (x1 * x2) + q(3) * x3);
  return (ch * todd_class(r)).c[3] * Rational(r);
}

Integer binomial(const Integer& n, int k) {
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

BundleInvariants twist_binomial(int r, const BundleInvariants& e, const Integer& n) {
  const Integer k = e.rank();
  return BundleInvariants(
      e.rank(), e.c1() + k * n,
      e.c2() + r * (k - 1) * n * e.c1() + r * binomial(k, 2) * n * n,
      e.c3() + (k - 2) * n * e.c2() + r * binomial(k - 1, 2) * n * n * e.c1() +
          r * binomial(k, 3) * n * n * n);
}

struct Expected {
  int rank;
  int c1;
  int lower;
  int upper;
  int c3_slope, c3_intercept;
  int g_slope, g_intercept;
};

// Published classification for ranks 3 and 4 on the quartic.
constexpr std::array<Expected, 10> kTable{{
    {3, 1, 5, 5, 0, 2, 0, 2},
    {3, 2, 8, 11, 1, -6, 1, -2},
    {3, 3, 17, 18, 2, -26, 2, -12},
    {3, 4, 27, 28, 3, -66, 3, -32},
    {4, 1, 6, 6, 0, 4, 0, 3},
    {4, 2, 8, 12, 1, -4, 1, -1},
    {4, 3, 16, 22, 2, -24, 2, -11},
    {4, 4, 28, 32, 3, -64, 3, -31},
    {4, 5, 44, 46, 4, -132, 4, -65},
    {4, 6, 64, 64, 0, 84, 5, -117},
}};

class Runner {
 public:
  explicit Runner(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  BundleInvariants random_invariants(int max_rank = 8) {
    return BundleInvariants(uniform(1, max_rank), uniform(-20, 20), uniform(-200, 200),
                            uniform(-500, 500));
  }

  template <typename Body>
  void check(const std::string& name, Body body) {
    CheckResult result{name, true, 0, {}};
    auto fail = [&](const std::string& why) {
      if (result.passed) result.detail = why;
      result.passed = false;
    };
    try {
      body(result.cases, fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    report_.checks.push_back(std::move(result));
  }

  SelfcheckReport take() { return std::move(report_); }

 private:
  std::mt19937_64 rng_;
  SelfcheckReport report_;
};

using Fail = std::function<void(const std::string&)>;

}  // namespace

std::size_t SelfcheckReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

SelfcheckReport run_selfcheck(const FormulaTable& f, std::uint64_t seed) {
  Runner run(seed);
  const HypersurfaceContext quartic(4);

  run.check("twist-inverse", [&](std::size_t& cases, const Fail& fail) {
    for (; cases < 1000; ++cases) {
      const auto inv = run.random_invariants();
      const int n = run.uniform(-10, 10);
      if (f.twist(quartic, f.twist(quartic, inv, n), -n) != inv) {
        fail(inv.str() + " n=" + std::to_string(n));
      }
    }
  });

  run.check("twist-additive", [&](std::size_t& cases, const Fail& fail) {
    for (; cases < 1000; ++cases) {
      const HypersurfaceContext ctx(run.uniform(1, 6));
      const auto inv = run.random_invariants();
      const int m = run.uniform(-10, 10);
      const int n = run.uniform(-10, 10);
      if (f.twist(ctx, f.twist(ctx, inv, m), n) != f.twist(ctx, inv, m + n)) {
        fail(inv.str() + " m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  });

  run.check("twist-binomial-form", [&](std::size_t& cases, const Fail& fail) {
    for (; cases < 1000; ++cases) {
      const int r = run.uniform(1, 8);
      const auto inv = run.random_invariants();
      const int n = run.uniform(-10, 10);
      if (f.twist(HypersurfaceContext(r), inv, n) != twist_binomial(r, inv, n)) {
        fail(inv.str() + " r=" + std::to_string(r) + " n=" + std::to_string(n));
      }
    }
  });

  run.check("chi-cubic-in-twist", [&](std::size_t& cases, const Fail& fail) {
    for (; cases < 200; ++cases) {
      const HypersurfaceContext ctx(run.uniform(1, 6));
      const auto inv = run.random_invariants();
      std::vector<Rational> values;
      for (int n = -5; n <= 5; ++n) values.push_back(f.chi_bundle(ctx, f.twist(ctx, inv, n)));
      for (int order = 0; order < 4; ++order) {
        for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
      }
      for (const auto& v : values) {
        if (v != 0) fail(inv.str() + " fourth difference " + v.str());
      }
    }
  });

  run.check("chi-matches-hrr", [&](std::size_t& cases, const Fail& fail) {
    for (; cases < 1000; ++cases) {
      const int r = run.uniform(1, 8);
      const auto inv = run.random_invariants();
      if (f.chi_bundle(HypersurfaceContext(r), inv) != hrr_chi(r, inv)) {
        fail(inv.str() + " r=" + std::to_string(r));
      }
    }
  });

  run.check("chi-line-constant-term", [&](std::size_t& cases, const Fail& fail) {
    for (int r = 1; r <= 10; ++r, ++cases) {
      const Integer rr = r;
      Rational expected(rr * (5 - rr) * (10 - 5 * rr + rr * rr), Integer(24));
      if (f.chi_line_bundle(HypersurfaceContext(r), 0) != expected) {
        fail("r=" + std::to_string(r));
      }
    }
  });

  run.check("chi-line-integral", [&](std::size_t& cases, const Fail& fail) {
    for (int r = 1; r <= 10; ++r) {
      for (int a = -10; a <= 10; ++a, ++cases) {
        if (!f.chi_line_bundle(HypersurfaceContext(r), a).is_integer()) {
          fail("r=" + std::to_string(r) + " a=" + std::to_string(a));
        }
      }
    }
  });

  run.check("genus-general-equals-quartic", [&](std::size_t& cases, const Fail& fail) {
    for (; cases < 1000; ++cases) {
      const auto inv = run.random_invariants();
      if (inv.rank() < 2) continue;
      if (f.genus_general(quartic, inv) != f.genus_r4(inv)) fail(inv.str());
    }
  });

  // g = 1 - chi(O_X) + chi(E(-c1)) - (k-1) chi(O(-c1)) on every degree.
  run.check("genus-matches-ideal-sheaf", [&](std::size_t& cases, const Fail& fail) {
    for (; cases < 1000; ++cases) {
      const auto inv = run.random_invariants();
      if (inv.rank() < 2) continue;
      const HypersurfaceContext ctx(run.uniform(1, 9));
      const Rational ideal = f.chi_bundle(ctx, f.twist(ctx, inv, -inv.c1())) -
                             Rational(Integer(inv.rank() - 1)) * f.chi_line_bundle(ctx, -inv.c1());
      const Rational expected = Rational(1) - f.chi_line_bundle(ctx, 0) + ideal;
      if (f.genus_general(ctx, inv) != expected) {
        fail("r=" + std::to_string(ctx.degree()) + " " + inv.str());
      }
    }
  });

  // Random (k, c1, c2) with c3 eliminated by the vanishing of chi(E(-1)).
  std::vector<BundleInvariants> acm_samples;
  for (int i = 0; i < 1000; ++i) {
    const int k = run.uniform(2, 8);
    const Integer c1 = run.uniform(-10, 10);
    const Integer c2 = run.uniform(-200, 200);
    try {
      acm_samples.emplace_back(k, c1, c2, f.c3_from_acm(k, c1, c2));
    } catch (const Error&) {
      acm_samples.emplace_back(k, c1, c2, Integer(0));
    }
  }

  run.check("acm-chi-of-minus-one-vanishes", [&](std::size_t& cases, const Fail& fail) {
    for (const auto& e : acm_samples) {
      ++cases;
      if (f.chi_bundle(quartic, f.twist(quartic, e, -1)) != 0) fail(e.str());
    }
  });

  run.check("acm-chi-closed-form", [&](std::size_t& cases, const Fail& fail) {
    for (const auto& e : acm_samples) {
      ++cases;
      Rational expected(-e.c2() + 2 * e.c1() * e.c1() + 2 * e.rank());
      if (f.chi_bundle(quartic, e) != expected) fail(e.str());
    }
  });

  run.check("acm-genus-composition", [&](std::size_t& cases, const Fail& fail) {
    for (const auto& e : acm_samples) {
      ++cases;
      if (f.genus_r4(e) != Rational(f.genus_from_acm(e.rank(), e.c1(), e.c2()))) fail(e.str());
    }
  });

  run.check("interval-within-general-bound", [&](std::size_t& cases, const Fail& fail) {
    for (int k = 2; k <= 8; ++k) {
      for (const auto& row : enumerate_acm_r4(k)) {
        ++cases;
        if (row.interval.upper > c2_upper_general(quartic, k, row.c1).value) {
          fail("k=" + std::to_string(k) + " c1=" + row.c1.str());
        }
      }
    }
  });

  run.check("classification-table", [&](std::size_t& cases, const Fail& fail) {
    std::vector<EnumerationRow> rows = enumerate_acm_r4(3);
    for (auto& row : enumerate_acm_r4(4)) rows.push_back(std::move(row));
    if (rows.size() != kTable.size()) {
      fail("expected " + std::to_string(kTable.size()) + " rows, got " +
           std::to_string(rows.size()));
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i, ++cases) {
      const auto& want = kTable[i];
      const auto& row = rows[i];
      const std::string where = "k=" + std::to_string(want.rank) + " c1=" + std::to_string(want.c1);
      if (row.rank != want.rank || row.c1 != want.c1 || row.interval.lower != want.lower ||
          row.interval.upper != want.upper) {
        fail(where + " interval");
        continue;
      }
      for (const auto& p : row.points) {
        Integer c3 = f.c3_from_acm(want.rank, want.c1, p.c2);
        Integer g = f.genus_from_acm(want.rank, want.c1, p.c2);
        if (c3 != want.c3_slope * p.c2 + want.c3_intercept || p.c3 != c3) fail(where + " c3");
        if (g != want.g_slope * p.c2 + want.g_intercept || p.genus != g) fail(where + " genus");
      }
    }
  });

  run.check("whitney-product", [&](std::size_t& cases, const Fail& fail) {
    auto compare = [&](int r, const Rank2Class& a, const Rank2Class& b) {
      ++cases;
      Truncated prod = total_chern(r, a.c1, a.c2, 0) * total_chern(r, b.c1, b.c2, 0);
      const auto got = f.extend_rank2(HypersurfaceContext(r), a, b);
      if (Rational(got.c1()) != prod.c[1] || Rational(got.c2()) != prod.c[2] * Rational(r) ||
          Rational(got.c3()) != prod.c[3] * Rational(r) || got.rank() != 4) {
        fail("r=" + std::to_string(r) + " " + a.str() + "+" + b.str());
      }
    };
    for (int r : {3, 4}) {
      for (const auto& a : catalog(r)) {
        for (const auto& b : catalog(r)) compare(r, a.chern, b.chern);
      }
    }
    for (int i = 0; i < 500; ++i) {
      compare(run.uniform(1, 8), {run.uniform(-10, 10), run.uniform(-50, 50)},
              {run.uniform(-10, 10), run.uniform(-50, 50)});
    }
  });

  run.check("extension-symmetric", [&](std::size_t& cases, const Fail& fail) {
    for (int i = 0; i < 500; ++i, ++cases) {
      const HypersurfaceContext ctx(run.uniform(1, 8));
      Rank2Class a{run.uniform(-10, 10), run.uniform(-50, 50)};
      Rank2Class b{run.uniform(-10, 10), run.uniform(-50, 50)};
      if (f.extend_rank2(ctx, a, b) != f.extend_rank2(ctx, b, a)) fail(a.str() + "+" + b.str());
    }
  });

  const auto star_extensions = extension_quadruples(Catalog::builtin(), 4, Pool::StarOnly);

  run.check("extensions-admissible", [&](std::size_t& cases, const Fail& fail) {
    std::set<BundleInvariants> admissible;
    for (const auto& row : enumerate_acm_r4(4)) {
      for (const auto& p : row.points) admissible.insert(row.invariants(p));
    }
    for (const auto& w : star_extensions) {
      ++cases;
      if (!admissible.count(w.result)) fail(w.result.str());
    }
  });

  run.check("decompose-exhaustive", [&](std::size_t& cases, const Fail& fail) {
    for (int r : {3, 4}) {
      for (Pool pool : {Pool::StarOnly, Pool::Normalized}) {
        for (const auto& w : extension_quadruples(Catalog::builtin(), r, pool)) {
          ++cases;
          const auto found = decompose(Catalog::builtin(), r, w.result, pool);
          bool hit = std::any_of(found.begin(), found.end(), [&](const ExtensionWitness& x) {
            return x.left == w.left && x.right == w.right;
          });
          if (!hit) fail(w.pair_str() + " at r=" + std::to_string(r));
        }
      }
    }
  });

  run.check("extension-genus-nonnegative", [&](std::size_t& cases, const Fail& fail) {
    for (const auto& w : star_extensions) {
      ++cases;
      Rational g = f.genus_r4(w.result);
      if (!g.is_integer() || g < 0) fail(w.result.str() + " genus " + g.str());
    }
  });

  run.check("sextic-not-an-extension", [&](std::size_t& cases, const Fail& fail) {
    cases = 28;
    if (!decompose(Catalog::builtin(), 4, BundleInvariants(4, 1, 6, 4), Pool::Normalized).empty()) {
      fail("(4;1,6,4) decomposes");
    }
  });

  run.check("coverage-realized", [&](std::size_t& cases, const Fail& fail) {
    std::set<BundleInvariants> want4{{4, 1, 6, 4},   {4, 2, 10, 6},  {4, 2, 11, 7},
                                     {4, 2, 12, 8},  {4, 3, 19, 14}, {4, 3, 20, 16},
                                     {4, 4, 29, 23}, {4, 4, 30, 26}, {4, 4, 32, 32},
                                     {4, 5, 46, 52}, {4, 6, 64, 84}};
    std::set<BundleInvariants> want3{{3, 1, 5, 2}};
    for (int k : {3, 4}) {
      const auto report = coverage_report(Catalog::builtin(), k);
      cases += report.entries.size();
      const auto realized = report.realized();
      if (std::set<BundleInvariants>(realized.begin(), realized.end()) != (k == 3 ? want3 : want4)) {
        fail("realized set for k=" + std::to_string(k));
      }
    }
  });

  return run.take();
}

}  // namespace acm
