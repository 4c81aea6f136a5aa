#include "acm/extensions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "acm/constraints.hpp"
#include "acm/errors.hpp"

namespace acm {

namespace {

Rank2CatalogEntry entry(int r, int c1, int c2, bool star, GlobalGeneration gg) {
  return {r, {c1, c2}, star, gg};
}

}  // namespace

std::string to_string(GlobalGeneration gg) {
  switch (gg) {
    case GlobalGeneration::Always: return "always";
    case GlobalGeneration::Generically: return "generic";
    case GlobalGeneration::No: return "no";
  }
  return "unknown";
}

std::string to_string(Pool pool) { return pool == Pool::StarOnly ? "star" : "normalized"; }

std::string to_string(Realization realization) {
  switch (realization) {
    case Realization::Extension: return "extension";
    case Realization::Curve: return "curve";
    case Realization::Open: return "open";
  }
  return "unknown";
}

std::string Rank2Class::str() const { return "(" + c1.str() + "," + c2.str() + ")"; }

bool operator<(const Rank2Class& a, const Rank2Class& b) {
  return std::tie(a.c1, a.c2) < std::tie(b.c1, b.c2);
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = [] {
    using GG = GlobalGeneration;
    Catalog c;
    c.add(entry(3, 0, 1, false, GG::No));
    c.add(entry(3, 1, 2, true, GG::No));
    c.add(entry(3, 2, 5, true, GG::No));
    c.add(entry(4, -1, 1, false, GG::No));
    c.add(entry(4, 0, 2, false, GG::No));
    c.add(entry(4, 1, 3, true, GG::No));
    c.add(entry(4, 1, 4, true, GG::No));
    c.add(entry(4, 1, 5, false, GG::No));
    c.add(entry(4, 2, 8, true, GG::Generically));
    c.add(entry(4, 3, 14, true, GG::Always));
    return c;
  }();
  return cat;
}

void Catalog::add(Rank2CatalogEntry e) {
  auto& list = by_degree_[e.degree];
  list.push_back(std::move(e));
}

Catalog Catalog::parse(std::istream& in, const std::string& source) {
  Catalog cat;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok.front().front() == '#') continue;
    if (tok.size() != 5) {
      throw CatalogParseError(source, lineno,
                              "expected 5 fields `r c1 c2 star gg`, found " +
                                  std::to_string(tok.size()));
    }

    Rank2CatalogEntry e;
    try {
      Integer r = parse_integer(tok[0]);
      if (r < 1 || r > 1000000) throw InvalidArgument("degree out of range: " + tok[0]);
      e.degree = static_cast<int>(r);
      e.chern = {parse_integer(tok[1]), parse_integer(tok[2])};
    } catch (const InvalidArgument& err) {
      throw CatalogParseError(source, lineno, err.what());
    }

    if (tok[3] == "1") {
      e.satisfies_star = true;
    } else if (tok[3] != "0") {
      throw CatalogParseError(source, lineno, "star flag must be 0 or 1, got '" + tok[3] + "'");
    }

    if (tok[4] == "always") {
      e.globally_generated = GlobalGeneration::Always;
    } else if (tok[4] == "generic") {
      e.globally_generated = GlobalGeneration::Generically;
    } else if (tok[4] == "no") {
      e.globally_generated = GlobalGeneration::No;
    } else {
      throw CatalogParseError(source, lineno,
                              "global generation must be always, generic or no, got '" +
                                  tok[4] + "'");
    }

    if (cat.supports(e.degree)) {
      for (const auto& existing : cat.by_degree_.at(e.degree)) {
        if (existing.chern == e.chern) {
          throw CatalogParseError(source, lineno, "duplicate entry " + e.chern.str() +
                                                      " for r=" + std::to_string(e.degree));
        }
      }
    }
    cat.add(std::move(e));
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file '" + path + "'");
  return parse(in, path);
}

const std::vector<Rank2CatalogEntry>& Catalog::entries(int degree) const {
  auto it = by_degree_.find(degree);
  if (it == by_degree_.end()) throw UnsupportedDegree(degree);
  return it->second;
}

std::vector<Rank2CatalogEntry> Catalog::pool(int degree, Pool pool) const {
  std::vector<Rank2CatalogEntry> out;
  for (const auto& e : entries(degree)) {
    if (pool == Pool::Normalized || e.satisfies_star) out.push_back(e);
  }
  return out;
}

std::vector<Rank2CatalogEntry> catalog(int degree) { return Catalog::builtin().entries(degree); }

BundleInvariants extend_rank2(const HypersurfaceContext& ctx, const Rank2Class& sub,
                              const Rank2Class& quotient) {
  // c(E) = c(E') c(E''); rank-two bundles on a threefold have no c3, and
  // H . H has degree r against the hyperplane.
  return BundleInvariants(4, sub.c1 + quotient.c1,
                          sub.c2 + ctx.degree() * sub.c1 * quotient.c1 + quotient.c2,
                          sub.c2 * quotient.c1 + sub.c1 * quotient.c2);
}

ExtensionWitness::ExtensionWitness(const HypersurfaceContext& ctx, Rank2CatalogEntry a,
                                   Rank2CatalogEntry b)
    : left(std::move(a)),
      right(std::move(b)),
      result(extend_rank2(ctx, left.chern, right.chern)) {
  if (right.chern < left.chern) std::swap(left, right);
}

std::string ExtensionWitness::pair_str() const { return left.chern.str() + "+" + right.chern.str(); }

std::vector<ExtensionWitness> extension_quadruples(const Catalog& cat, int degree, Pool pool) {
  const HypersurfaceContext ctx(degree);
  const auto members = cat.pool(degree, pool);
  std::vector<ExtensionWitness> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) out.emplace_back(ctx, members[i], members[j]);
  }
  std::sort(out.begin(), out.end(), [](const ExtensionWitness& a, const ExtensionWitness& b) {
    if (a.result < b.result) return true;
    if (b.result < a.result) return false;
    if (a.left.chern < b.left.chern) return true;
    if (b.left.chern < a.left.chern) return false;
    return a.right.chern < b.right.chern;
  });
  return out;
}

std::map<BundleInvariants, std::vector<ExtensionWitness>> group_by_result(
    const std::vector<ExtensionWitness>& witnesses) {
  std::map<BundleInvariants, std::vector<ExtensionWitness>> out;
  for (const auto& w : witnesses) out[w.result].push_back(w);
  return out;
}

std::vector<ExtensionWitness> decompose(const Catalog& cat, int degree,
                                        const BundleInvariants& target, Pool pool) {
  if (!cat.supports(degree)) throw UnsupportedDegree(degree);
  if (target.rank() != 4) throw RankUnsupported(target.rank());
  std::vector<ExtensionWitness> out;
  for (auto& w : extension_quadruples(cat, degree, pool)) {
    if (w.result == target) out.push_back(std::move(w));
  }
  return out;
}

const std::vector<CurveExample>& curve_examples() {
  static const std::vector<CurveExample> examples{
      {BundleInvariants(4, 1, 6, 4), CurveInvariants(6, 3),
       "projectively normal space sextic of genus 3"},
      {BundleInvariants(3, 1, 5, 2), CurveInvariants(5, 2),
       "curve of type (2,3) on a smooth quadric, degree 5 genus 2"},
  };
  return examples;
}

std::size_t CoverageReport::count(Realization realization) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [&](const CoverageEntry& e) { return e.realization == realization; }));
}

std::vector<BundleInvariants> CoverageReport::with(Realization realization) const {
  std::vector<BundleInvariants> out;
  for (const auto& e : entries) {
    if (e.realization == realization) out.push_back(e.invariants);
  }
  return out;
}

std::vector<BundleInvariants> CoverageReport::realized() const {
  std::vector<BundleInvariants> out;
  for (const auto& e : entries) {
    if (e.realization != Realization::Open) out.push_back(e.invariants);
  }
  return out;
}

CoverageReport coverage_report(const Catalog& cat, int rank) {
  if (!is_refined_rank(rank)) {
    throw InvalidArgument("coverage is defined for rank 3 or 4, got " + std::to_string(rank));
  }
  const auto by_result = group_by_result(extension_quadruples(cat, 4, Pool::StarOnly));

  CoverageReport report;
  report.rank = rank;
  for (const auto& row : enumerate_acm_r4(rank)) {
    for (const auto& p : row.points) {
      CoverageEntry e{row.invariants(p), p.genus, Realization::Open, {}};
      if (auto it = by_result.find(e.invariants); it != by_result.end()) {
        e.realization = Realization::Extension;
        for (const auto& w : it->second) e.citations.push_back("extension " + w.pair_str());
      }
      for (const auto& ex : curve_examples()) {
        if (ex.invariants == e.invariants) {
          if (e.realization == Realization::Open) e.realization = Realization::Curve;
          e.citations.push_back("curve: " + ex.construction);
        }
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace acm
