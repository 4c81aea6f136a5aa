#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acm/chern.hpp"
#include "acm/constraints.hpp"
#include "acm/extensions.hpp"
#include "acm/selfcheck.hpp"

namespace acm {

enum class OutputFormat { Table, Json, Csv };

/// Version of the JSON envelope {schema_version, command, inputs, results}.
inline constexpr int kSchemaVersion = 1;

/// Exit status plus the exact bytes destined for stdout and stderr.
/// 0 = success, 1 = domain error, 2 = usage error. On nonzero exit `out` is
/// empty.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Parses `k,c1,c2,c3` (no spaces, negatives allowed); throws InvalidArgument.
BundleInvariants parse_quadruple(const std::string& text);

/// Renders `s*c2+b` in the compact form used by the classification table,
/// e.g. `2c2-26`, `c2-6`, `84`.
std::string render_affine(const Integer& slope, const Integer& intercept);

CommandResult cmd_chi_line(int degree, const Integer& a, OutputFormat format);
CommandResult cmd_chi_bundle(int degree, const BundleInvariants& inv, OutputFormat format);
CommandResult cmd_twist(int degree, const BundleInvariants& inv, const Integer& n,
                        OutputFormat format);
CommandResult cmd_genus(int degree, const BundleInvariants& inv, OutputFormat format);
CommandResult cmd_enumerate(int rank, OutputFormat format);
CommandResult cmd_extensions(const Catalog& cat, int degree, Pool pool, OutputFormat format);
CommandResult cmd_decompose(const Catalog& cat, int degree, const BundleInvariants& target,
                            Pool pool, bool expect_witness, OutputFormat format);
CommandResult cmd_coverage(const Catalog& cat, int rank, OutputFormat format);
CommandResult cmd_selfcheck(OutputFormat format, const FormulaTable& formulas = {});

/// Full command-line front end. `args` excludes the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace acm
