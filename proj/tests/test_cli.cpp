#include <doctest.h>

#include "commands.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = modjac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"coeffs"}).code == 2);
  CHECK(run({"coeffs", "nope"}).code == 2);
  CHECK(run({"coeffs", "cohen"}).code == 2);
  CHECK(run({"coeffs", "cohen:x"}).code == 2);
  CHECK(run({"coeffs", "theta", "--prec", "3"}).code == 2);
  CHECK(run({"coeffs", "theta", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  CHECK(run({"map", "j-even"}).code == 2);
  CHECK(run({"map", "j-even", "--target", "theta"}).code == 2);
  CHECK(run({"map", "s-d0-even", "--target", "jacobi_eis:3:2", "--d0", "4"}).code == 2);
  CHECK(run({"map", "s-d0-even", "--target", "jacobi_eis:3:2", "--d0", "104"}).code == 2);
  CHECK(run({"map", "hecke-tj", "--target", "jacobi_eis:3:2", "--p", "2"}).code == 2);
  Result r = run({"coeffs", "cohen_star:5:2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("coeffs") {
  Result r = run({"coeffs", "theta3", "--prec", "10"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("k") == 1);
  CHECK(j.at("prec") == 10);
  CHECK(j.at("coeffs")[1] == nlohmann::json::array({1, "6"}));

  Result c = run({"coeffs", "theta3", "--prec", "8", "--format", "csv"});
  CHECK(c.out == "exponent,coefficient\n0,1\n1,6\n2,12\n3,8\n4,6\n5,24\n6,24\n7,0\n");

  Result e = run({"coeffs", "eta:3", "--prec", "10", "--format", "csv"});
  CHECK(e.out == "exponent,coefficient\n1/8,1\n9/8,-3\n");

  Result s = run({"coeffs", "cohen_star:3:2", "--prec", "12"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out).at("plus_class") == 3);

  CHECK(run({"coeffs", "jacobi_eis:5:1", "--prec", "40"}).code == 0);
  CHECK(run({"coeffs", "jacobi_cusp:5:4", "--prec", "40"}).code == 0);
  CHECK(run({"coeffs", "newform:8", "--prec", "40"}).code == 0);
  CHECK(run({"coeffs", "newform:4", "--prec", "40"}).code == 2);
}

TEST_CASE("verify") {
  Result r = run({"verify", "sigma3", "--bound", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sigma(3) = 1/2 r3(3)") != std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("suite") == "sigma3");

  Result c = run({"verify", "r3-class", "--bound", "50", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("suite,check,pass,detail\n", 0) == 0);

  // the theta^4 identity with coefficients 1/3 and 3/2 does not hold
  Result t = run({"verify", "theta-identity", "--prec", "50"});
  CHECK(t.code == 1);

  CHECK(run({"verify", "eigen-chain", "--r", "5", "--k", "1", "--primes", "3"}).code == 0);
  CHECK(run({"verify", "eigen-chain", "--primes", "3,x"}).code == 2);
}

TEST_CASE("map") {
  Result r = run({"map", "j-even", "--target", "jacobi_eis:5:1", "--prec", "40"});
  REQUIRE(r.code == 0);
  Result e = run({"coeffs", "e_3_2_8", "--prec", "40"});
  auto a = nlohmann::json::parse(r.out), b = nlohmann::json::parse(e.out);
  CHECK(a.at("coeffs") == b.at("coeffs"));

  Result t = run({"map", "hecke-tj", "--target", "jacobi_eis:3:2", "--p", "3", "--prec", "90"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out).at("prec") == 10);

  Result s = run({"map", "s-d0-odd", "--target", "jacobi_cusp:5:4", "--d0", "3", "--prec", "400", "--format", "csv"});
  REQUIRE(s.code == 0);
  CHECK(s.out.rfind("exponent,coefficient\n0,0\n", 0) == 0);

  const std::string path = "modjac_cli_test_form.json";
  Result f = run({"map", "j-odd", "--target", "jacobi_cusp:7:1", "--prec", "60", "--out", path});
  REQUIRE(f.code == 0);
  CHECK(f.out.empty());
  Result back = run({"map", "j-odd-inv", "--in", path});
  CHECK(back.code == 0);
  CHECK(nlohmann::json::parse(back.out).at("r") == 7);
  CHECK(run({"map", "hecke-tp", "--in", path}).code == 2);
  std::remove(path.c_str());
  CHECK(run({"map", "j-odd-inv", "--in", path}).code == 2);
}

TEST_CASE("table") {
  Result r = run({"table", "--bound", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "N,H,r3\n0,-1/12,1\n1,0,6\n2,0,12\n3,1/3,8\n4,1/2,6\n");
  auto j = nlohmann::json::parse(run({"table", "--bound", "3"}).out);
  CHECK(j.size() == 4);
  CHECK(j[3].at("H") == "1/3");
}
