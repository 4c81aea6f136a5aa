#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "acm/chern.hpp"
#include "acm/rational.hpp"

namespace acm {

enum class GlobalGeneration { Always, Generically, No };

std::string to_string(GlobalGeneration gg);

/// Chern numbers (c1, c2) of a rank-two bundle.
struct Rank2Class {
  Integer c1;
  Integer c2;

  std::string str() const;  // `(c1,c2)`
  friend bool operator==(const Rank2Class&, const Rank2Class&) = default;
  friend bool operator<(const Rank2Class& a, const Rank2Class& b);
};

/// A normalized undecomposable rank-two ACM class on X_r.
struct Rank2CatalogEntry {
  int degree = 0;
  Rank2Class chern;
  bool satisfies_star = false;
  GlobalGeneration globally_generated = GlobalGeneration::No;

  friend bool operator==(const Rank2CatalogEntry&, const Rank2CatalogEntry&) = default;
};

enum class Pool {
  Normalized,  // the full classification
  StarOnly,    // entries satisfying condition star
};

std::string to_string(Pool pool);

/// Rank-two ACM classes by ambient degree.
///
/// The built-in catalog covers the cubic and the quartic. A catalog can also
/// be read from a text file, one `r c1 c2 star gg` entry per line, which
/// replaces the built-in data entirely.
class Catalog {
 public:
  static const Catalog& builtin();
  /// Throws CatalogParseError with the 1-based line number of the problem.
  static Catalog parse(std::istream& in, const std::string& source = "<catalog>");
  static Catalog load(const std::string& path);

  /// Entries for degree r in insertion order; throws UnsupportedDegree.
  const std::vector<Rank2CatalogEntry>& entries(int degree) const;
  std::vector<Rank2CatalogEntry> pool(int degree, Pool pool) const;
  bool supports(int degree) const { return by_degree_.count(degree) > 0; }

 private:
  void add(Rank2CatalogEntry entry);

  std::map<int, std::vector<Rank2CatalogEntry>> by_degree_;
};

/// Built-in catalog for r in {3, 4}; throws UnsupportedDegree otherwise.
std::vector<Rank2CatalogEntry> catalog(int degree);

/// Invariants of any rank-four E in 0 -> E' -> E -> E'' -> 0 with E', E''
/// of rank two. Symmetric in its two arguments.
BundleInvariants extend_rank2(const HypersurfaceContext& ctx, const Rank2Class& sub,
                              const Rank2Class& quotient);

/// An unordered pair of catalog entries and the extension invariants.
/// `left` never sorts after `right`.
struct ExtensionWitness {
  Rank2CatalogEntry left;
  Rank2CatalogEntry right;
  BundleInvariants result;

  ExtensionWitness(const HypersurfaceContext& ctx, Rank2CatalogEntry a, Rank2CatalogEntry b);
  std::string pair_str() const;  // `(c1,c2)+(c1,c2)`
};

/// All unordered pairs (with repetition) from the pool, ordered by result and
/// then by left entry.
std::vector<ExtensionWitness> extension_quadruples(const Catalog& cat, int degree, Pool pool);

/// The extension witnesses grouped by resulting invariants.
std::map<BundleInvariants, std::vector<ExtensionWitness>> group_by_result(
    const std::vector<ExtensionWitness>& witnesses);

/// Every unordered pool pair whose extension has exactly the target
/// invariants. An empty result is a definitive negative over the pool.
std::vector<ExtensionWitness> decompose(const Catalog& cat, int degree,
                                        const BundleInvariants& target, Pool pool);

enum class Realization { Extension, Curve, Open };

std::string to_string(Realization realization);

/// Rank-three and rank-four quartic examples built from curves rather than
/// from extensions.
struct CurveExample {
  BundleInvariants invariants;
  CurveInvariants curve;
  std::string construction;
};

const std::vector<CurveExample>& curve_examples();

struct CoverageEntry {
  BundleInvariants invariants;
  Integer genus;
  Realization realization = Realization::Open;
  std::vector<std::string> citations;
};

struct CoverageReport {
  int rank = 0;
  std::vector<CoverageEntry> entries;  // enumeration order

  std::size_t count(Realization realization) const;
  std::vector<BundleInvariants> with(Realization realization) const;
  std::vector<BundleInvariants> realized() const;
};

/// Labels each admissible quartic quadruple of rank k in {3, 4} as realized
/// by a star-pool extension, by a curve construction, or open.
CoverageReport coverage_report(const Catalog& cat, int rank);

}  // namespace acm
