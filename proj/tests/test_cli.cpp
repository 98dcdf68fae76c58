#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "quinfield/cli.hpp"
#include "quinfield/poly_io.hpp"
#include "quinfield/resolvents.hpp"

using namespace quinfield;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "quinfield");
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json js(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("compare") {
  auto r = cli({"compare", "d5:5,-1", "d5:0,1", "--output", "json"});
  CHECK(r.code == 0);
  auto j = js(r);
  CHECK(j["verdict"] == "EQUAL");
  CHECK(j["table_row"] == "II-3");
  for (const char* key : {"groups", "dts", "witnesses", "caveats"}) CHECK(j.contains(key));

  auto t = cli({"compare", "d5:5,-1", "d5:0,1", "--output", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("EQUAL") != std::string::npos);
  CHECK(t.out.find("II-3") != std::string::npos);

  auto bad = cli({"compare", "d5:0,1", "d5:0,1/0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("1/0") != std::string::npos);
  CHECK(cli({"compare", "d5:0,1", "x7:0,1"}).code == 2);
  CHECK(cli({"compare", "d5:0,1", "d5:0.5,1"}).code == 2);
  CHECK(cli({"compare", "d5:0,1", "d5:3,0"}).code == 2);
}

TEST_CASE("group") {
  auto r = cli({"group", "d5:-18,1"});
  CHECK(r.code == 0);
  CHECK(js(r)["group"] == "C5");
  auto t = cli({"group", "d5:-18,1", "--output", "text"});
  CHECK(t.out.rfind("C5", 0) == 0);
}

TEST_CASE("resolvent round trip") {
  auto r = cli({"resolvent", "F2", "d5:5,-1", "d5:0,1"});
  CHECK(r.code == 0);
  auto j = js(r);
  CHECK(j["kind"] == "F2");
  const PolyQ expect = fi<Rational>(2, 5, -1, 0, 1);
  CHECK(poly_from_json(j["coeffs"]) == expect);
  CHECK(parse_poly(j["poly"].get<std::string>()) == expect);
  CHECK(j["dt_fold"] == "5,2^2,1");
  CHECK(j["dt_split"] == "5,1^5");
  CHECK(j["factorization"].size() == 4);
  CHECK_FALSE(j["caveats"].empty());
  CHECK(cli({"resolvent", "F9", "d5:5,-1", "d5:0,1"}).code == 2);
}

TEST_CASE("search") {
  auto r = cli({"search", "d5", "--fix", "0,1", "--range", "-10:45", "--t-fixed", "1", "--jobs", "2"});
  CHECK(r.code == 0);
  auto j = js(r);
  std::vector<std::string> pts;
  for (const auto& m : j["matches"]) pts.push_back(m["point"]);
  CHECK(pts == std::vector<std::string>{"d5:-6,1", "d5:-1,1", "d5:0,1", "d5:41,1"});
  CHECK(cli({"search", "d5", "--fix", "0,1", "--range", "5:1", "--t-fixed", "1"}).code == 2);
  CHECK(cli({"search", "d5", "--fix", "0,1", "--range", "1:5", "--t-fixed", "1", "--primes", "4"}).code == 2);
  CHECK(cli({"search", "d5", "--fix", "0,1", "--range", "1:5", "--t-fixed", "1", "--jobs", "0"}).code == 2);
  CHECK(cli({"search", "d5", "--fix", "0,1", "--range", "1:5"}).code == 2);
}

TEST_CASE("verify") {
  auto r = cli({"verify", "--seed", "3", "--trials", "5", "--char2-field-bits", "12"});
  CHECK(r.code == 0);
  CHECK(js(r)["all_passed"] == true);
  CHECK(cli({"verify", "--trials", "0"}).code == 2);
}

TEST_CASE("text and json agree") {
  for (auto [a, b] : {std::pair{"d5:0,1", "d5:2,1"}, {"c5:3,3", "c5:23,3"}, {"d5:0,1", "d5:-18,1"}}) {
    auto j = cli({"compare", a, b});
    auto t = cli({"compare", a, b, "--output", "text"});
    CHECK(t.out.rfind(js(j)["verdict"].get<std::string>(), 0) == 0);
  }
}

TEST_CASE("misc") {
  CHECK(cli({"--version"}).code == 0);
  CHECK_FALSE(cli({"--version"}).out.empty());
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}
