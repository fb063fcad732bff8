#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/expression.hpp"
#include "clausen/errors.hpp"

using namespace clausen;
using namespace clausen::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expression grammar") {
  const auto ctx = make_context(30);
  CHECK(Expression::parse("2pi/7").evaluate(ctx).to_fixed(20) == (ctx.pi() * 2L / 7L).to_fixed(20));
  CHECK(Expression::parse("4phi7").evaluate(ctx).to_fixed(20) == (ctx.phi7() * 4L).to_fixed(20));
  CHECK(Expression::parse("-2^2").evaluate(ctx).to_fixed(5) == "-4.00000");
  CHECK(Expression::parse("2^3^2").evaluate(ctx).to_fixed(1) == "512.0");
  CHECK(Expression::parse("sqrt(7) - 2 sqrt(3)").evaluate(ctx).to_fixed(10) == "-0.8183503041");
  CHECK(Expression::parse("1.5e2").evaluate(ctx).to_fixed(1) == "150.0");
  CHECK(Expression::parse("t*log(t)", true).evaluate(ctx, ctx.rational(1, 2)).to_fixed(10) == "-0.3465735903");
  CHECK(Expression::parse("2pit", true).uses_variable());
  CHECK_THROWS_AS(Expression::parse("t"), ArgumentError);
  CHECK_THROWS_AS(Expression::parse("system(1)"), ArgumentError);
  CHECK_THROWS_AS(Expression::parse("1 +"), ArgumentError);
  CHECK_THROWS_AS(Expression::parse("(1"), ArgumentError);
}

TEST_CASE("pi multiples") {
  auto pm = parse_pi_multiple("2pi/7");
  REQUIRE(pm);
  CHECK(pm->numerator == 2);
  CHECK(pm->denominator == 7);
  pm = parse_pi_multiple("-pi");
  REQUIRE(pm);
  CHECK(pm->numerator == -1);
  CHECK(parse_pi_multiple("0")->numerator == 0);
  CHECK_FALSE(parse_pi_multiple("0.5"));
  CHECK_FALSE(parse_pi_multiple("phi7"));
}

TEST_CASE("eval") {
  auto r = run_cli({"eval", "L", "-7", "2", "--digits", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1.15192547054449104710169", 0) == 0);
  CHECK(r.out.size() == std::string("1.").size() + 30 + 1);

  r = run_cli({"eval", "cl2", "pi", "--digits", "20"});
  CHECK(r.out == "0.00000000000000000000\n");

  std::string table;
  for (int n = 1; n <= 7; ++n) table += run_cli({"eval", "kronecker", "-7", std::to_string(n)}).out;
  CHECK(table == "1\n1\n-1\n1\n-1\n-1\n0\n");

  r = run_cli({"--digits", "20", "eval", "hurwitz", "2", "1/2"});
  CHECK(r.out == "4.93480220054467930942\n");

  r = run_cli({"eval", "A", "0", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].is_string());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"eval", "cl2"}).code == 2);
  CHECK(run_cli({"eval", "zeta", "2"}).code == 2);
  CHECK(run_cli({"eval", "L", "-6", "2"}).code == 2);
  CHECK(run_cli({"eval", "hurwitz", "1", "1"}).code == 2);
  CHECK(run_cli({"eval", "cl2", "1", "--digits", "5"}).code == 2);
  CHECK(run_cli({"eval", "cl2", "1", "--format", "xml"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  const auto bad = run_cli({"verify", "nope"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("eq2") != std::string::npos);
}

TEST_CASE("integrate") {
  auto r = run_cli({"integrate", "custom", "0", "1", "log(t)", "--digits", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1.000000000000000000000000000000\n", 0) == 0);
  CHECK(r.out.find("levels_used") != std::string::npos);
  CHECK(r.out.find("evaluations") != std::string::npos);

  const auto w1 = run_cli({"integrate", "i7", "--digits", "40", "--workers", "1"});
  const auto w8 = run_cli({"integrate", "i7", "--digits", "40", "--workers", "8"});
  CHECK(w1.code == 0);
  CHECK(w1.out == w8.out);
  const auto l = run_cli({"eval", "L", "-7", "2", "--digits", "40"});
  CHECK(w1.out.substr(0, 40) == l.out.substr(0, 40));

  CHECK(run_cli({"integrate", "custom", "0", "1", "1/(t-1/2)"}).code == 3);
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", "eq5", "--digits", "30", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["reports"][0]["passed"] == true);
  CHECK(j["reports"][0]["lhs_value"].is_string());
  r = run_cli({"verify", "lemma2", "--seed", "99", "--digits", "20", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["reports"][0]["seed"] == "99");
}

TEST_CASE("discover") {
  auto r = run_cli({"discover", "--digits", "120"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("6 -6 2 -7 -7 7\n", 0) == 0);
  r = run_cli({"discover", "--digits", "50"});
  CHECK(r.code == 2);
  CHECK(r.err.find("100") != std::string::npos);
}

TEST_CASE("sample") {
  auto r = run_cli({"sample", "1000"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,value");
  int rows = 0;
  const double phi = std::atan(std::sqrt(7.0));
  double near_phi = 0, near_start = 0;
  while (std::getline(in, line)) {
    ++rows;
    const double theta = std::stod(line.substr(0, line.find(',')));
    const double value = std::stod(line.substr(line.find(',') + 1));
    CHECK(std::fabs(theta - phi) >= kSampleGuardBand);
    CHECK(theta > M_PI / 3);
    CHECK(theta < M_PI / 2);
    if (rows == 1) near_start = std::fabs(value);
    near_phi = std::max(near_phi, std::fabs(value));
  }
  CHECK(rows == 1000);
  CHECK(near_phi > near_start);
  CHECK(r.out.find('\r') == std::string::npos);

  // a grid point landing inside the band is pushed out
  for (int n : {2, 3, 7, 1001, 99999}) {
    for (double x : sample_abscissas(n)) CHECK(std::fabs(x - phi) >= kSampleGuardBand);
  }
  CHECK(run_cli({"sample", "1"}).code == 2);
  CHECK(run_cli({"sample", "2"}).out.find('\n', 12) != std::string::npos);
}

TEST_CASE("constants and --output") {
  const auto path = std::filesystem::temp_directory_path() / "clausen_cli_test_constants.txt";
  auto r = run_cli({"constants", "--digits", "15", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("phi7 1.209429202888189") != std::string::npos);
  std::filesystem::remove(path);
}

}
