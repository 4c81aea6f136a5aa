#include "acm/report.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "acm/errors.hpp"

namespace acm {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

Json to_json(const Rational& q) {
  Json out;
  out["value"] = q.str();
  out["integral"] = q.is_integer();
  out["integer"] = q.is_integer() ? to_json(q.numerator()) : Json(nullptr);
  return out;
}

Json to_json(const BundleInvariants& inv) {
  return Json{{"k", inv.rank()}, {"c1", to_json(inv.c1())}, {"c2", to_json(inv.c2())},
              {"c3", to_json(inv.c3())}};
}

Json to_json(const Rank2CatalogEntry& e) {
  return Json{{"c1", to_json(e.chern.c1)},
              {"c2", to_json(e.chern.c2)},
              {"star", e.satisfies_star},
              {"globally_generated", to_string(e.globally_generated)}};
}

std::string envelope(const std::string& command, Json inputs, Json results) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  return doc.dump(2) + "\n";
}

// Left-aligned columns separated by two spaces; the last column is not padded.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += row[i];
        if (i + 1 < row.size()) out += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Converts library errors into exit status 1 with nothing on stdout.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

std::string interval_cell(const C2Interval& iv) {
  if (iv.empty()) return "empty";
  if (iv.lower == iv.upper) return iv.lower.str();
  return "[" + iv.lower.str() + "," + iv.upper.str() + "]";
}

// c3 and g are affine in c2 for fixed (k, c1); a single point prints its value.
std::string formula_cell(const EnumerationRow& row,
                         Integer (*formula)(int, const Integer&, const Integer&),
                         Integer AcmPoint::*field) {
  if (row.empty()) return "-";
  if (row.points.size() == 1) return (row.points.front().*field).str();
  const Integer at0 = formula(row.rank, row.c1, 0);
  return render_affine(formula(row.rank, row.c1, 1) - at0, at0);
}

std::vector<std::string> tag_names(const std::vector<BoundTag>& tags) {
  std::vector<std::string> out;
  for (BoundTag t : tags) out.push_back(to_string(t));
  return out;
}

}  // namespace

BundleInvariants parse_quadruple(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 4) {
    throw InvalidArgument("expected k,c1,c2,c3 but got '" + text + "'");
  }
  Integer k = parse_integer(parts[0]);
  if (k < 1 || k > 100000) throw InvalidArgument("rank out of range in '" + text + "'");
  return BundleInvariants(static_cast<int>(k), parse_integer(parts[1]), parse_integer(parts[2]),
                          parse_integer(parts[3]));
}

std::string render_affine(const Integer& slope, const Integer& intercept) {
  if (slope == 0) return intercept.str();
  std::string out;
  if (slope == -1) {
    out = "-";
  } else if (slope != 1) {
    out = slope.str();
  }
  out += "c2";
  if (intercept > 0) out += "+" + intercept.str();
  if (intercept < 0) out += intercept.str();
  return out;
}

CommandResult cmd_chi_line(int degree, const Integer& a, OutputFormat format) {
  return guarded([&] {
    const Rational chi = chi_line_bundle(HypersurfaceContext(degree), a);
    switch (format) {
      case OutputFormat::Json:
        return CommandResult{
            0, envelope("chi", Json{{"r", degree}, {"line", Json{{"a", to_json(a)}}}}, to_json(chi)),
            ""};
      case OutputFormat::Csv:
        return CommandResult{0, csv_line({"r", "a", "chi"}) + csv_line({std::to_string(degree),
                                                                         a.str(), chi.str()}),
                             ""};
      case OutputFormat::Table: break;
    }
    return CommandResult{0, chi.str() + "\n", ""};
  });
}

CommandResult cmd_chi_bundle(int degree, const BundleInvariants& inv, OutputFormat format) {
  return guarded([&] {
    const Rational chi = chi_bundle(HypersurfaceContext(degree), inv);
    switch (format) {
      case OutputFormat::Json:
        return CommandResult{
            0, envelope("chi", Json{{"r", degree}, {"bundle", to_json(inv)}}, to_json(chi)), ""};
      case OutputFormat::Csv:
        return CommandResult{
            0,
            csv_line({"r", "k", "c1", "c2", "c3", "chi"}) +
                csv_line({std::to_string(degree), std::to_string(inv.rank()), inv.c1().str(),
                          inv.c2().str(), inv.c3().str(), chi.str()}),
            ""};
      case OutputFormat::Table: break;
    }
    return CommandResult{0, chi.str() + "\n", ""};
  });
}

CommandResult cmd_twist(int degree, const BundleInvariants& inv, const Integer& n,
                        OutputFormat format) {
  return guarded([&] {
    const BundleInvariants out = twist(HypersurfaceContext(degree), inv, n);
    switch (format) {
      case OutputFormat::Json:
        return CommandResult{
            0,
            envelope("twist", Json{{"r", degree}, {"bundle", to_json(inv)}, {"n", to_json(n)}},
                     to_json(out)),
            ""};
      case OutputFormat::Csv:
        return CommandResult{0,
                             csv_line({"k", "c1", "c2", "c3"}) +
                                 csv_line({std::to_string(out.rank()), out.c1().str(),
                                           out.c2().str(), out.c3().str()}),
                             ""};
      case OutputFormat::Table: break;
    }
    return CommandResult{0, out.str() + "\n", ""};
  });
}

CommandResult cmd_genus(int degree, const BundleInvariants& inv, OutputFormat format) {
  return guarded([&] {
    const Rational g = genus_general(HypersurfaceContext(degree), inv);
    switch (format) {
      case OutputFormat::Json:
        return CommandResult{
            0, envelope("genus", Json{{"r", degree}, {"bundle", to_json(inv)}}, to_json(g)), ""};
      case OutputFormat::Csv:
        return CommandResult{0, csv_line({"genus"}) + csv_line({g.str()}), ""};
      case OutputFormat::Table: break;
    }
    return CommandResult{0, g.str() + "\n", ""};
  });
}

CommandResult cmd_enumerate(int rank, OutputFormat format) {
  return guarded([&] {
    const auto rows = enumerate_acm_r4(rank);
    const bool refined = is_refined_rank(rank);
    CommandResult result;

    if (format == OutputFormat::Json) {
      Json list = Json::array();
      for (const auto& row : rows) {
        Json c2s = Json::array(), c3s = Json::array(), gs = Json::array();
        for (const auto& p : row.points) {
          c2s.push_back(to_json(p.c2));
          c3s.push_back(to_json(p.c3));
          gs.push_back(to_json(p.genus));
        }
        list.push_back(Json{
            {"k", row.rank},
            {"c1", to_json(row.c1)},
            {"c2_lower", to_json(row.interval.lower)},
            {"c2_upper", to_json(row.interval.upper)},
            {"empty", row.empty()},
            {"c2", c2s},
            {"c3", c3s},
            {"g", gs},
            {"c3_formula", formula_cell(row, c3_from_acm, &AcmPoint::c3)},
            {"g_formula", formula_cell(row, genus_from_acm, &AcmPoint::genus)},
            {"lower_bound_from", tag_names(row.interval.lower_tags)},
            {"upper_bound_from", tag_names(row.interval.upper_tags)},
        });
      }
      result.out = envelope("enumerate", Json{{"k", rank}, {"refined", refined}}, list);
      return result;
    }

    if (format == OutputFormat::Csv) {
      result.out = csv_line({"k", "c1", "c2", "c3", "g"});
      for (const auto& row : rows) {
        for (const auto& p : row.points) {
          result.out += csv_line(
              {std::to_string(row.rank), row.c1.str(), p.c2.str(), p.c3.str(), p.genus.str()});
        }
      }
      return result;
    }

    TextTable table({"k", "c1", "c2", "c3", "g"});
    for (const auto& row : rows) {
      table.add({std::to_string(row.rank), row.c1.str(), interval_cell(row.interval),
                 formula_cell(row, c3_from_acm, &AcmPoint::c3),
                 formula_cell(row, genus_from_acm, &AcmPoint::genus)});
    }
    result.out = table.str();
    if (!refined) result.out += "# unrefined: only the general quartic bounds apply at this rank\n";
    return result;
  });
}

CommandResult cmd_extensions(const Catalog& cat, int degree, Pool pool, OutputFormat format) {
  return guarded([&] {
    const HypersurfaceContext ctx(degree);
    const auto witnesses = extension_quadruples(cat, degree, pool);
    const auto grouped = group_by_result(witnesses);
    CommandResult result;

    if (format == OutputFormat::Json) {
      Json list = Json::array();
      for (const auto& w : witnesses) {
        list.push_back(Json{{"left", to_json(w.left)},
                            {"right", to_json(w.right)},
                            {"result", to_json(w.result)},
                            {"genus", to_json(genus_general(ctx, w.result))}});
      }
      Json quads = Json::array();
      for (const auto& [inv, ws] : grouped) {
        Json entry = to_json(inv);
        entry["witnesses"] = ws.size();
        quads.push_back(entry);
      }
      result.out = envelope("extensions", Json{{"r", degree}, {"pool", to_string(pool)}},
                            Json{{"witnesses", list}, {"quadruples", quads}});
      return result;
    }

    if (format == OutputFormat::Csv) {
      result.out = csv_line({"left", "right", "k", "c1", "c2", "c3", "g"});
      for (const auto& w : witnesses) {
        result.out += csv_line({w.left.chern.str(), w.right.chern.str(),
                                std::to_string(w.result.rank()), w.result.c1().str(),
                                w.result.c2().str(), w.result.c3().str(),
                                genus_general(ctx, w.result).str()});
      }
      return result;
    }

    TextTable table({"left", "right", "k", "c1", "c2", "c3", "g"});
    for (const auto& w : witnesses) {
      table.add({w.left.chern.str(), w.right.chern.str(), std::to_string(w.result.rank()),
                 w.result.c1().str(), w.result.c2().str(), w.result.c3().str(),
                 genus_general(ctx, w.result).str()});
    }
    result.out = table.str() + "# " + std::to_string(witnesses.size()) + " witnesses, " +
                 std::to_string(grouped.size()) + " distinct quadruples\n";
    return result;
  });
}

CommandResult cmd_decompose(const Catalog& cat, int degree, const BundleInvariants& target,
                            Pool pool, bool expect_witness, OutputFormat format) {
  return guarded([&] {
    const auto found = decompose(cat, degree, target, pool);
    if (found.empty() && expect_witness) {
      return CommandResult{1, "",
                           "error: no decomposition of " + target.str() + " over the " +
                               to_string(pool) + " pool at r=" + std::to_string(degree) + "\n"};
    }
    CommandResult result;
    if (format == OutputFormat::Json) {
      Json list = Json::array();
      for (const auto& w : found) {
        list.push_back(Json{{"left", to_json(w.left)}, {"right", to_json(w.right)}});
      }
      result.out = envelope(
          "decompose",
          Json{{"r", degree}, {"target", to_json(target)}, {"pool", to_string(pool)}},
          Json{{"decomposable", !found.empty()}, {"witnesses", list}});
    } else if (format == OutputFormat::Csv) {
      result.out = csv_line({"left", "right"});
      for (const auto& w : found) result.out += csv_line({w.left.chern.str(), w.right.chern.str()});
    } else if (found.empty()) {
      result.out = "no decomposition\n";
    } else {
      for (const auto& w : found) result.out += w.pair_str() + "  " + w.result.str() + "\n";
    }
    return result;
  });
}

CommandResult cmd_coverage(const Catalog& cat, int rank, OutputFormat format) {
  return guarded([&] {
    const auto report = coverage_report(cat, rank);
    const std::size_t ext = report.count(Realization::Extension);
    const std::size_t curve = report.count(Realization::Curve);
    const std::size_t open = report.count(Realization::Open);
    CommandResult result;

    if (format == OutputFormat::Json) {
      Json list = Json::array();
      for (const auto& e : report.entries) {
        Json item = to_json(e.invariants);
        item["g"] = to_json(e.genus);
        item["status"] = to_string(e.realization);
        item["citations"] = e.citations;
        list.push_back(item);
      }
      Json summary{{"admissible", report.entries.size()},
                   {"realized", ext + curve},
                   {"extension", ext},
                   {"curve", curve},
                   {"open", open}};
      result.out = envelope("coverage", Json{{"k", rank}},
                            Json{{"summary", summary}, {"quadruples", list}});
      return result;
    }

    if (format == OutputFormat::Csv) {
      result.out = csv_line({"k", "c1", "c2", "c3", "g", "status", "evidence"});
      for (const auto& e : report.entries) {
        result.out += csv_line({std::to_string(e.invariants.rank()), e.invariants.c1().str(),
                                e.invariants.c2().str(), e.invariants.c3().str(), e.genus.str(),
                                to_string(e.realization), join(e.citations, "; ")});
      }
      return result;
    }

    TextTable table({"k", "c1", "c2", "c3", "g", "status", "evidence"});
    for (const auto& e : report.entries) {
      table.add({std::to_string(e.invariants.rank()), e.invariants.c1().str(),
                 e.invariants.c2().str(), e.invariants.c3().str(), e.genus.str(),
                 to_string(e.realization), e.citations.empty() ? "-" : join(e.citations, "; ")});
    }
    result.out = table.str() + "# admissible " + std::to_string(report.entries.size()) +
                 ", realized " + std::to_string(ext + curve) + " (extension " +
                 std::to_string(ext) + ", curve " + std::to_string(curve) + "), open " +
                 std::to_string(open) + "\n";
    return result;
  });
}

CommandResult cmd_selfcheck(OutputFormat format, const FormulaTable& formulas) {
  return guarded([&] {
    const auto report = run_selfcheck(formulas);
    std::string body;
    if (format == OutputFormat::Json) {
      Json list = Json::array();
      for (const auto& c : report.checks) {
        list.push_back(Json{{"name", c.name},
                            {"passed", c.passed},
                            {"cases", c.cases},
                            {"detail", c.detail}});
      }
      body = envelope("selfcheck", Json::object(),
                      Json{{"passed", report.passed()},
                           {"total", report.checks.size()},
                           {"checks", list}});
    } else if (format == OutputFormat::Csv) {
      body = csv_line({"name", "passed", "cases", "detail"});
      for (const auto& c : report.checks) {
        body += csv_line({c.name, c.passed ? "1" : "0", std::to_string(c.cases), c.detail});
      }
    } else {
      TextTable table({"status", "check", "cases", "detail"});
      for (const auto& c : report.checks) {
        table.add({c.passed ? "PASS" : "FAIL", c.name, std::to_string(c.cases),
                   c.detail.empty() ? "-" : c.detail});
      }
      body = table.str() + std::to_string(report.passed()) + "/" +
             std::to_string(report.checks.size()) + " checks passed\n";
    }
    if (report.ok()) return CommandResult{0, body, ""};
    return CommandResult{1, "", body};
  });
}

}  // namespace acm
