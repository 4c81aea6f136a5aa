#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "acm/errors.hpp"
#include "acm/report.hpp"

using acm::CommandResult;
using nlohmann::json;

namespace {

CommandResult cli(std::vector<std::string> args) { return acm::run_cli(args); }

std::string data_path(const std::string& name) { return std::string(ACM_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("render_affine") {
    CHECK(acm::render_affine(2, -26) == "2c2-26");
    CHECK(acm::render_affine(1, -6) == "c2-6");
    CHECK(acm::render_affine(0, 84) == "84");
    CHECK(acm::render_affine(-1, 3) == "-c2+3");
    CHECK(acm::render_affine(3, 0) == "3c2");
    CHECK(acm::render_affine(1, 6) == "c2+6");
  }

  TEST_CASE("parse_quadruple") {
    CHECK(acm::parse_quadruple("4,1,6,4") == acm::BundleInvariants(4, 1, 6, 4));
    CHECK(acm::parse_quadruple("2,-1,1,0") == acm::BundleInvariants(2, -1, 1, 0));
    for (const char* bad : {"", "4,1,6", "4,1,6,4,5", "4,a,6,4", "0,1,6,4", "4,,6,4", "4;1,6,4"}) {
      CHECK_THROWS_AS(acm::parse_quadruple(bad), acm::InvalidArgument);
    }
  }

  TEST_CASE("chi and twist commands") {
    auto r = cli({"chi", "--line", "-a", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5\n");
    CHECK(cli({"chi", "--line", "-a", "-1"}).out == "-1\n");
    CHECK(cli({"chi", "--bundle", "4,1,6,4"}).out == "4\n");
    CHECK(cli({"twist", "--bundle", "3,1,5,2", "--n", "1"}).out == "(3;4,25,15)\n");
    CHECK(cli({"twist", "--bundle", "3,4,25,15", "-n", "-1"}).out == "(3;1,5,2)\n");
    CHECK(cli({"genus", "--bundle", "4,6,64,84"}).out == "203\n");
  }

  TEST_CASE("chi json envelope") {
    auto r = cli({"chi", "--bundle", "4,1,6,4", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["schema_version"] == acm::kSchemaVersion);
    CHECK(j["command"] == "chi");
    CHECK(j["inputs"]["bundle"]["c2"] == 6);
    CHECK(j["results"]["integer"] == 4);
  }

  TEST_CASE("global flags may precede the subcommand") {
    auto a = cli({"--format", "json", "genus", "--bundle", "4,6,64,84"});
    auto b = cli({"genus", "--bundle", "4,6,64,84", "--format", "json"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("enumerate table") {
    const auto r = cli({"enumerate", "--k", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "k  c1  c2       c3      g\n"
          "3  1   5        2       2\n"
          "3  2   [8,11]   c2-6    c2-2\n"
          "3  3   [17,18]  2c2-26  2c2-12\n"
          "3  4   [27,28]  3c2-66  3c2-32\n");
    CHECK(cli({"enumerate", "--k", "9"}).out.find("# unrefined") != std::string::npos);
  }

  TEST_CASE("enumerate json agrees with csv") {
    const auto j = json::parse(cli({"enumerate", "--k", "4", "--format", "json"}).out);
    const auto csv = cli({"enumerate", "--k", "4", "--format", "csv"}).out;
    std::size_t points = 0;
    for (const auto& row : j["results"]) {
      for (std::size_t i = 0; i < row["c2"].size(); ++i) {
        const std::string line = std::to_string(row["k"].get<int>()) + "," +
                                 std::to_string(row["c1"].get<int>()) + "," +
                                 std::to_string(row["c2"][i].get<long long>()) + "," +
                                 std::to_string(row["c3"][i].get<long long>()) + "," +
                                 std::to_string(row["g"][i].get<long long>()) + "\n";
        CHECK(csv.find(line) != std::string::npos);
        ++points;
      }
    }
    CHECK(points == 22);
  }

  TEST_CASE("json output is deterministic and round-trips") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"enumerate", "--k", "4", "--format", "json"},
             {"extensions", "--r", "4", "--format", "json"},
             {"coverage", "--k", "4", "--format", "json"},
             {"decompose", "--target", "4,4,30,26", "--format", "json"},
             {"selfcheck", "--format", "json"}}) {
      const auto first = cli(args);
      REQUIRE(first.exit_code == 0);
      CHECK(first.out == cli(args).out);
      CHECK(nlohmann::ordered_json::parse(first.out).dump(2) + "\n" == first.out);
    }
  }

  TEST_CASE("extensions and decompose") {
    const auto ext = cli({"extensions", "--r", "4"});
    CHECK(ext.exit_code == 0);
    CHECK(ext.out.find("# 10 witnesses, 10 distinct quadruples") != std::string::npos);
    CHECK(cli({"extensions", "--r", "3"}).out.find("(2,5)  (2,5)  4  4   22  20") != std::string::npos);
    CHECK(cli({"decompose", "--target", "4,6,64,84"}).out == "(3,14)+(3,14)  (4;6,64,84)\n");
    CHECK(cli({"decompose", "--target", "4,1,6,4", "--pool", "normalized"}).out ==
          "no decomposition\n");
    const auto strict = cli({"decompose", "--target", "4,4,31,29", "--expect-witness"});
    CHECK(strict.exit_code == 1);
    CHECK(strict.out.empty());
    CHECK_FALSE(strict.err.empty());
    CHECK(cli({"decompose", "--target", "4,4,31,29", "--pool", "normalized"}).out ==
          "(1,5)+(3,14)  (4;4,31,29)\n");
  }

  TEST_CASE("coverage summary") {
    CHECK(cli({"coverage", "--k", "4"}).out.find(
              "# admissible 22, realized 11 (extension 10, curve 1), open 11") != std::string::npos);
    CHECK(cli({"coverage", "--k", "3"}).out.find(
              "# admissible 9, realized 1 (extension 0, curve 1), open 8") != std::string::npos);
  }

  TEST_CASE("selfcheck passes and lists its checks") {
    const auto r = cli({"selfcheck", "--format", "json"});
    CHECK(r.exit_code == 0);
    const auto checks = json::parse(r.out)["results"]["checks"];
    CHECK(checks.size() >= 12);
    for (const auto& c : checks) CHECK(c["passed"] == true);
  }

  TEST_CASE("selfcheck catches a corrupted formula") {
    auto expect_red = [](acm::FormulaTable t) {
      const auto r = acm::cmd_selfcheck(acm::OutputFormat::Table, t);
      CHECK(r.exit_code == 1);
      CHECK(r.out.empty());
      CHECK(r.err.find("FAIL") != std::string::npos);
    };
    acm::FormulaTable c3;
    c3.c3_from_acm = [](int k, const acm::Integer& c1, const acm::Integer& c2) {
      return acm::c3_from_acm(k, c1, c2) + 1;
    };
    expect_red(c3);
    acm::FormulaTable tw;
    tw.twist = [](const acm::HypersurfaceContext& ctx, const acm::BundleInvariants& e,
                  const acm::Integer& n) {
      const auto t = acm::twist(ctx, e, n);
      return acm::BundleInvariants(t.rank(), t.c1(), t.c2() + n, t.c3());
    };
    expect_red(tw);
    acm::FormulaTable ext;
    ext.extend_rank2 = [](const acm::HypersurfaceContext& ctx, const acm::Rank2Class& a,
                          const acm::Rank2Class& b) {
      const auto e = acm::extend_rank2(ctx, a, b);
      return acm::BundleInvariants(4, e.c1(), e.c2(), e.c3() + 2);
    };
    expect_red(ext);
  }

  TEST_CASE("domain errors exit 1 with empty stdout") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"extensions", "--r", "5"},
             {"decompose", "--target", "3,1,5,2"},
             {"decompose", "--r", "7", "--target", "4,1,6,4"},
             {"genus", "--bundle", "1,1,0,0"},
             {"extensions", "--catalog", data_path("bad_field_count.catalog")}}) {
      const auto r = cli(args);
      CHECK_MESSAGE(r.exit_code == 1, args[0]);
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
  }

  TEST_CASE("catalog file errors name the line") {
    const auto r = cli({"extensions", "--catalog", data_path("bad_field_count.catalog")});
    CHECK(r.err.find("bad_field_count.catalog:3:") != std::string::npos);
  }

  TEST_CASE("a catalog override replaces the built-in data") {
    const auto r = cli({"extensions", "--r", "5", "--catalog", data_path("quintic.catalog")});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# 3 witnesses") != std::string::npos);
    CHECK(cli({"extensions", "--r", "4", "--catalog", data_path("quintic.catalog")}).exit_code == 1);
  }

  TEST_CASE("usage errors exit 2 with empty stdout") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"chi", "--line"},
             {"chi", "--line", "-a", "1", "--bundle", "4,1,6,4"},
             {"enumerate"},
             {"enumerate", "--k", "1"},
             {"chi", "--bundle", "0,1,1,1"},
             {"coverage", "--k", "5"},
             {"extensions", "--pool", "everything"},
             {"genus", "--bundle", "4,1,6,4", "--format", "xml"}}) {
      const auto r = cli(args);
      CHECK(r.exit_code == 2);
      CHECK(r.out.empty());
    }
  }

  TEST_CASE("help exits 0") {
    const auto r = cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("enumerate") != std::string::npos);
  }
}
