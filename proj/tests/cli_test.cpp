#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = posmon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_numeric(const nlohmann::json& j) {
  if (j.is_number()) return true;
  if (j.is_structured()) {
    for (const auto& v : j) {
      if (has_numeric(v)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("factor as json") {
  const auto r = run({"factor", "--gens", "3,5", "--target", "15", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "factor");
  const auto& zs = j.at("result").at("factorizations");
  REQUIRE(zs.size() == 2);
  CHECK_FALSE(has_numeric(j));
}

TEST_CASE("member and lengths") {
  auto r = run({"member", "--gens", "3,5", "--target", "7", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("result").at("member") == false);
  r = run({"lengths", "--gens", "1/2,1/3", "--target", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find('2') != std::string::npos);
  CHECK(r.out.find('3') != std::string::npos);
}

TEST_CASE("paper report") {
  const auto r = run({"paper", "--example", "inf-z3", "--report", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK_FALSE(has_numeric(j));
  const auto again = run({"paper", "--example", "inf-z3", "--report", "--format", "json"});
  CHECK(again.out == r.out);
  CHECK(run({"paper", "--example", "qx-P"}).code == 0);
}

TEST_CASE("growth csv header") {
  const auto r = run({"growth", "--example", "inf-z3", "--target", "3", "--range", "1..4", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("N,count,max_length\n", 0) == 0);
  CHECK(r.out.find("4,4,") != std::string::npos);
}

TEST_CASE("usage errors exit 2 without stdout") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"factor", "--gens", "3,5"},
           {"nosuch"},
           {"factor", "--gens", "3,", "--target", "1"},
           {"atoms", "--gens", "1/", "--format", "json"},
           {"paper", "--example", "unknown"},
           {"growth", "--example", "inf-z3", "--target", "3", "--range", "4..1"},
       }) {
    const auto r = run(args);
    CAPTURE(args[0]);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("domain errors exit 1") {
  const auto r = run({"below", "--gens", "1,X", "--field", "QX", "--bound", "2*X"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(run({"divides", "--gens", "3,5", "--a", "3", "--target", "7"}).code == 1);
}

TEST_CASE("other commands") {
  CHECK(run({"atoms", "--gens", "4,6,10"}).code == 0);
  CHECK(run({"strata", "--gens", "1,X,X^2", "--field", "QX"}).code == 0);
  CHECK(run({"below", "--gens", "3,5", "--bound", "20", "--format", "csv"}).code == 0);
  CHECK(run({"classify", "--example", "halving", "--range", "1..5"}).code == 0);
  CHECK(run({"normalize", "--gens", "3*X/2,5*X/7", "--field", "QX"}).code == 0);
  CHECK(run({"bound", "--gens", "X,X^2+1", "--field", "QX"}).code == 0);
  const auto e = run({"eval", "--expr", "(p(n)^2+1)/p(n)", "--n", "3", "--format", "json"});
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out).at("result").at("value") == "26/5");
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
