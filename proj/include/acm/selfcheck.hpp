#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "acm/chern.hpp"
#include "acm/constraints.hpp"
#include "acm/extensions.hpp"

namespace acm {

/// The formula layer exercised by run_selfcheck. Defaults to the library
/// implementation; a harness can swap in a corrupted entry to confirm the
/// suite notices.
struct FormulaTable {
  std::function<Rational(const HypersurfaceContext&, const Integer&)> chi_line_bundle =
      acm::chi_line_bundle;
  std::function<Rational(const HypersurfaceContext&, const BundleInvariants&)> chi_bundle =
      acm::chi_bundle;
  std::function<BundleInvariants(const HypersurfaceContext&, const BundleInvariants&,
                                 const Integer&)>
      twist = acm::twist;
  std::function<Rational(const HypersurfaceContext&, const BundleInvariants&)> genus_general =
      acm::genus_general;
  std::function<Rational(const BundleInvariants&)> genus_r4 = acm::genus_r4;
  std::function<Integer(int, const Integer&, const Integer&)> c3_from_acm = acm::c3_from_acm;
  std::function<Integer(int, const Integer&, const Integer&)> genus_from_acm =
      acm::genus_from_acm;
  std::function<BundleInvariants(const HypersurfaceContext&, const Rank2Class&,
                                 const Rank2Class&)>
      extend_rank2 = acm::extend_rank2;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first counterexample, or empty
};

struct SelfcheckReport {
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  bool ok() const { return passed() == checks.size(); }
};

/// Runs every cross-module invariant with a deterministic seed.
SelfcheckReport run_selfcheck(const FormulaTable& formulas = {}, std::uint64_t seed = 20080101);

}  // namespace acm
