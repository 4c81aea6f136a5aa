#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "acm/errors.hpp"
#include "acm/report.hpp"

namespace acm {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer integer_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const InvalidArgument&) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
}

BundleInvariants quadruple_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_quadruple(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Pool pool_arg(const std::string& text) { return text == "normalized" ? Pool::Normalized : Pool::StarOnly; }

OutputFormat format_arg(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  return OutputFormat::Table;
}

CommandResult usage(const std::string& message) { return {2, "", "usage error: " + message + "\n"}; }

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Chern classes, Riemann-Roch and ACM bundle classification on hypersurfaces in P^4",
               "acmcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::string catalog_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--catalog", catalog_path, "Rank-two catalog override file (r c1 c2 star gg)");

  int degree = 4;
  int rank = 0;
  bool line = false;
  bool expect_witness = false;
  std::string a_text, bundle_text, n_text, target_text;
  std::string pool_text = "star";

  auto* chi = app.add_subcommand("chi", "Euler characteristic of O(a) or of a bundle");
  chi->add_option("--r", degree, "Degree of the hypersurface")->check(CLI::PositiveNumber);
  chi->add_flag("--line", line, "Evaluate chi(O(a))");
  chi->add_option("-a", a_text, "Twist of the line bundle");
  chi->add_option("--bundle", bundle_text, "Invariants k,c1,c2,c3");

  auto* tw = app.add_subcommand("twist", "Invariants of E(n)");
  tw->add_option("--r", degree, "Degree of the hypersurface")->check(CLI::PositiveNumber);
  tw->add_option("--bundle", bundle_text, "Invariants k,c1,c2,c3")->required();
  tw->add_option("--n,-n", n_text, "Twist")->required();

  auto* genus = app.add_subcommand("genus", "Genus of the dependency curve");
  genus->add_option("--r", degree, "Degree of the hypersurface")->check(CLI::PositiveNumber);
  genus->add_option("--bundle", bundle_text, "Invariants k,c1,c2,c3")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Admissible Chern classes on the quartic");
  enumerate->add_option("--k", rank, "Rank")->required()->check(CLI::Range(2, 10000));

  auto* extensions = app.add_subcommand("extensions", "Rank-four extensions of rank-two classes");
  extensions->add_option("--r", degree, "Degree of the hypersurface")->check(CLI::PositiveNumber);
  extensions->add_option("--pool", pool_text, "star or normalized")
      ->check(CLI::IsMember({"star", "normalized"}));

  auto* decompose = app.add_subcommand("decompose", "Split a rank-four class into rank-two pieces");
  decompose->add_option("--r", degree, "Degree of the hypersurface")->check(CLI::PositiveNumber);
  decompose->add_option("--target", target_text, "Invariants 4,c1,c2,c3")->required();
  decompose->add_option("--pool", pool_text, "star or normalized")
      ->check(CLI::IsMember({"star", "normalized"}));
  decompose->add_flag("--expect-witness", expect_witness, "Exit 1 when no witness exists");

  auto* coverage = app.add_subcommand("coverage", "Realized and open admissible quadruples");
  coverage->add_option("--k", rank, "Rank")->required()->check(CLI::IsMember({3, 4}));

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  const OutputFormat fmt = format_arg(format);
  try {
    std::unique_ptr<Catalog> loaded;
    auto cat = [&]() -> const Catalog& {
      if (catalog_path.empty()) return Catalog::builtin();
      if (!loaded) loaded = std::make_unique<Catalog>(Catalog::load(catalog_path));
      return *loaded;
    };

    if (chi->parsed()) {
      const bool has_a = !a_text.empty();
      const bool has_bundle = !bundle_text.empty();
      if (has_bundle && (line || has_a)) return usage("chi: --bundle conflicts with --line/-a");
      if (has_bundle) return cmd_chi_bundle(degree, quadruple_arg("--bundle", bundle_text), fmt);
      if (!has_a) return usage("chi: give either --line -a A or --bundle k,c1,c2,c3");
      return cmd_chi_line(degree, integer_arg("-a", a_text), fmt);
    }
    if (tw->parsed()) {
      return cmd_twist(degree, quadruple_arg("--bundle", bundle_text), integer_arg("--n", n_text),
                       fmt);
    }
    if (genus->parsed()) return cmd_genus(degree, quadruple_arg("--bundle", bundle_text), fmt);
    if (enumerate->parsed()) return cmd_enumerate(rank, fmt);
    if (extensions->parsed()) return cmd_extensions(cat(), degree, pool_arg(pool_text), fmt);
    if (decompose->parsed()) {
      return cmd_decompose(cat(), degree, quadruple_arg("--target", target_text),
                           pool_arg(pool_text), expect_witness, fmt);
    }
    if (coverage->parsed()) return cmd_coverage(cat(), rank, fmt);
    if (selfcheck->parsed()) return cmd_selfcheck(fmt);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
  return usage("no subcommand");
}

}  // namespace acm
