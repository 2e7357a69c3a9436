#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "finspinor/cli.hpp"

using namespace finspinor;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "finspinor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FINSPINOR_FIXTURES) + "/" + name; }

Json parse_ok(const Result& r) {
  INFO("stderr: " << r.err);
  REQUIRE(r.code == cli::kOk);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("matrix parsing", "[io]") {
  const auto m = io::parse_complex_matrix("[[[1, 2], [0, 0]], [[0, -1], [3.5, 0]]]");
  CHECK(m(0, 0) == Complex(1.0, 2.0));
  CHECK(m(1, 0) == Complex(0.0, -1.0));
  CHECK(m(1, 1) == Complex(3.5, 0.0));
  CHECK_THROWS_AS(io::parse_complex_matrix("[[[1, 0]], [[0, 0]]]"), ParseError);
  CHECK_THROWS_AS(io::parse_complex_matrix("[[1, 0], [0, 1]]"), ParseError);
  CHECK_THROWS_AS(io::parse_complex_matrix("{}"), ParseError);
  CHECK_THROWS_AS(io::parse_complex_matrix("[[[1, 0"), ParseError);
  CHECK_THROWS_AS(io::read_complex_matrix(fixture("does_not_exist.json")), ParseError);
  CHECK(io::read_complex_matrix(fixture("identity2.json")) == ComplexMatrix::identity(2));
}

TEST_CASE("json and csv round trips", "[io]") {
  const ComplexMatrix m{{Complex(0.1, -0.3), Complex(1e-17, 2.0)}, {Complex(-7.0, 0.0), Complex(1.0 / 3.0, 5e300)}};
  CHECK(io::complex_matrix_from_json(Json::parse(io::to_json(m).dump())) == m);
  const RealMatrix r{{1.0 / 3.0, -2.0}, {0.0, 1e-300}};
  CHECK(io::real_matrix_from_json(Json::parse(io::to_json(r).dump())) == r);
  const std::string csv = io::to_csv(r);
  CHECK(csv.rfind("row,col,value\n", 0) == 0);
  CHECK(csv.find("0,0,0.33333333333333331\n") != std::string::npos);
  CHECK(std::stod(io::num(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("basis subcommand", "[cli]") {
  for (int n : {2, 3, 4}) {
    const Json j = parse_ok(run_cli({"basis", "--n", std::to_string(n)}));
    CHECK(j["n"] == n);
    CHECK(j["e_lower"].size() == static_cast<std::size_t>(n * n));
    CHECK(j["e_upper"].size() == static_cast<std::size_t>(n * n));
    CHECK(j["pairing_residual"].get<double>() <= 1e-10);
  }
  const Json j3 = parse_ok(run_cli({"basis", "--n", "3"}));
  // E_2 = lambda_2 has -i at (0, 1).
  CHECK(j3["e_lower"][2][0][1] == Json::array({0.0, -1.0}));
  CHECK(j3["e_upper"][8][2][2] == Json::array({1.0, 0.0}));
  CHECK(run_cli({"basis", "--n", "1"}).code == cli::kParseError);
  CHECK(run_cli({"basis", "--n", "two"}).code == cli::kParseError);
}

TEST_CASE("lmap subcommand", "[cli]") {
  SECTION("identity") {
    const Json j = parse_ok(run_cli({"lmap", "--matrix", fixture("identity2.json")}));
    CHECK(j["rows"] == 4);
    CHECK(j["cols"] == 4);
    const RealMatrix l = io::real_matrix_from_json(j["entries"]);
    CHECK(l == RealMatrix::identity(4));
  }
  SECTION("golden n = 2 sample") {
    const Json j = parse_ok(run_cli({"lmap", "--matrix", fixture("sl2_sample.json")}));
    std::ifstream in(fixture("lmap_n2_golden.json"));
    const Json golden = Json::parse(in);
    const RealMatrix got = io::real_matrix_from_json(j["entries"]);
    const RealMatrix want = io::real_matrix_from_json(golden["entries"]);
    CHECK(max_abs_diff(got, want) <= 1e-12 * std::max(1.0, max_abs(want)));
  }
  SECTION("csv and pretty") {
    const Result csv = run_cli({"lmap", "--matrix", fixture("identity2.json"), "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("row,col,value\n0,0,1\n0,1,0\n", 0) == 0);
    const Result pretty = run_cli({"lmap", "--matrix", fixture("identity2.json"), "--format", "pretty"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.rfind("L (4x4):", 0) == 0);
  }
  SECTION("errors") {
    const Result det2 = run_cli({"lmap", "--matrix", fixture("det2.json")});
    CHECK(det2.code == cli::kNotUnimodular);
    CHECK(det2.err.find("det") != std::string::npos);
    CHECK(run_cli({"lmap", "--matrix", fixture("malformed.json")}).code == cli::kParseError);
    CHECK(run_cli({"lmap", "--matrix", fixture("not_square.json")}).code == cli::kParseError);
    CHECK(run_cli({"lmap", "--matrix", fixture("missing.json")}).code == cli::kParseError);
    CHECK(run_cli({"lmap"}).code == cli::kParseError);
    CHECK(run_cli({"lmap", "--n", "3", "--matrix", fixture("identity2.json")}).code == cli::kParseError);
    CHECK(run_cli({"lmap", "--matrix", fixture("identity2.json"), "--format", "xml"}).code == cli::kParseError);
  }
}

TEST_CASE("form subcommand", "[cli]") {
  const Json j2 = parse_ok(run_cli({"form", "--n", "2"}));
  CHECK(j2["degree"] == 2);
  CHECK(j2["coefficients"].size() == 4);
  CHECK(j2["coefficients"]["0,0"] == 1.0);
  CHECK(j2["coefficients"]["3,3"] == -1.0);
  CHECK(j2["det_check"]["max_relative_deviation"].get<double>() <= 1e-9);

  const Json j3 = parse_ok(run_cli({"form", "--n", "3"}));
  CHECK(j3["coefficients"]["0,0,8"].get<double>() == Catch::Approx(1.0 / 3.0));
  CHECK(j3["coefficients"]["1,4,6"].get<double>() == Catch::Approx(1.0 / 3.0));

  const Json j4 = parse_ok(run_cli({"form", "--n", "4"}));
  CHECK(j4["degree"] == 4);
  CHECK(j4["det_check"]["max_relative_deviation"].get<double>() <= 1e-9);

  const Result csv = run_cli({"form", "--n", "2", "--format", "csv"});
  CHECK(csv.out.rfind("index,coefficient\n\"0,0\",1\n", 0) == 0);
}

TEST_CASE("decompose subcommand", "[cli]") {
  const Json j = parse_ok(run_cli({"decompose", "--matrix", fixture("sl3_random.json")}));
  CHECK(j["branch"] == "principal-sqrt-of-inverse-m33");
  CHECK(j["reconstruction_residual"].get<double>() <= 1e-10);
  const ComplexMatrix m = io::read_complex_matrix(fixture("sl3_random.json"));
  const ComplexMatrix product = io::complex_matrix_from_json(j["factors"]["d1"]) *
                                io::complex_matrix_from_json(j["factors"]["d2"]) *
                                io::complex_matrix_from_json(j["factors"]["d3"]) *
                                io::complex_matrix_from_json(j["factors"]["d4"]);
  CHECK(max_abs_diff(product, m) <= 1e-10);

  CHECK(run_cli({"decompose", "--matrix", fixture("sl3_m33_zero.json")}).code == cli::kDomainError);
  CHECK(run_cli({"decompose", "--matrix", fixture("identity2.json")}).code == cli::kParseError);
  CHECK(run_cli({"decompose", "--matrix", fixture("sl3_random.json"), "--format", "pretty"}).code == cli::kOk);
}

TEST_CASE("verify subcommand", "[cli]") {
  for (int n : {2, 3, 5}) {
    const Json j = parse_ok(run_cli({"verify", "--n", std::to_string(n), "--trials", "40", "--seed", "11"}));
    CHECK(j["pass"] == true);
    CHECK(j["config"]["n"] == n);
    CHECK(j["generator"] == std::string(kGeneratorId));
    int skipped = 0, run = 0;
    for (const auto& rec : j["records"]) {
      if (rec["status"] == "skipped") {
        ++skipped;
        continue;
      }
      ++run;
      INFO(rec.dump());
      CHECK(rec["status"] == "pass");
    }
    CHECK(run > 0);
    CHECK(skipped > 0);
  }
  SECTION("deterministic output") {
    const auto a = run_cli({"verify", "--n", "3", "--trials", "25", "--seed", "4"});
    const auto b = run_cli({"verify", "--n", "3", "--trials", "25", "--seed", "4"});
    CHECK(a.out == b.out);
    const auto c = run_cli({"verify", "--n", "3", "--trials", "25", "--seed", "5"});
    CHECK(a.out != c.out);
  }
  SECTION("csv and pretty") {
    const Result csv = run_cli({"verify", "--n", "2", "--trials", "10", "--format", "csv"});
    CHECK(csv.out.rfind("name,status,trials,max_deviation,comparison,threshold\n", 0) == 0);
    const Result pretty = run_cli({"verify", "--n", "2", "--trials", "10", "--format", "pretty"});
    CHECK(pretty.out.find("ALL PASS") != std::string::npos);
  }
  SECTION("output file") {
    const std::string path = "finspinor_verify_out.json";
    CHECK(run_cli({"verify", "--n", "2", "--trials", "5", "--out", path}).code == 0);
    std::ifstream in(path);
    CHECK(Json::parse(in)["pass"] == true);
    std::remove(path.c_str());
  }
  CHECK(run_cli({"verify", "--trials", "0"}).code == cli::kParseError);
  CHECK(run_cli({"verify", "--tol-abs", "0", "--tol-rel", "0"}).code == cli::kParseError);
  CHECK(run_cli({}).code == cli::kParseError);
  CHECK(run_cli({"--version"}).out == std::string(kVersion) + "\n");
}
