#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "abelocus/cli.hpp"
#include "abelocus/json_io.hpp"

using namespace abelocus;
using json::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expect = 0) {
  args.insert(args.begin(), "--json");
  const Outcome o = run(args);
  REQUIRE(o.code == expect);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("equation prints the canonical relation") {
  const Outcome o = run({"equation", "6", "2", "3"});
  CHECK(o.code == 0);
  CHECK(o.out == "6*z1 - 5*z2 + z3 = 0, Delta = 1\n");
  const Json j = run_json({"equation", "90", "18", "45"});
  CHECK(j["result"]["text"] == "1620*z1 - 81*z2 + z3 = 0, Delta = 81");
  const SingularRelation rel = json::to_relation(j["result"]["relation"]);
  CHECK(rel.a == std::array<Int, 5>{18, -81, 1, 0, 0});
  CHECK(rel.p == 9);
}

TEST_CASE("check reports failures with exit 3") {
  const Json j = run_json({"check", "1", "2", "3"}, cli::kExitConditionFails);
  CHECK(j["status"] == "error");
  CHECK(j["result"]["complementary"] == false);
  CHECK(j["error"].is_string());
  CHECK(run({"check", "6", "2", "3"}).code == 0);
  CHECK(run({"decompose", "1", "2", "3"}).code == cli::kExitConditionFails);
}

TEST_CASE("envelope shape") {
  const Outcome o = run({"complements", "6", "6", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "status", "error"});
  CHECK(j["command"] == "complements");
  CHECK(j["inputs"] == Json{{"d", 6}, {"n", 6}});
  CHECK(j["result"] == Json::array({1, 2, 3, 6}));
  CHECK(j["status"] == "ok");
  CHECK(j["error"].is_null());
}

TEST_CASE("usage errors exit 2") {
  Outcome o = run({"frobnicate"});
  CHECK(o.code == cli::kExitInvalidInput);
  CHECK(o.err.find("Usage") != std::string::npos);
  o = run({"check", "6", "2", "3", "--no-such-flag"});
  CHECK(o.code == cli::kExitInvalidInput);
  CHECK(run({}).code == cli::kExitInvalidInput);
  CHECK(run({"check", "6", "2"}).code == cli::kExitInvalidInput);
  CHECK(run({"check", "six", "2", "3"}).code == cli::kExitInvalidInput);
  CHECK(run({"count", "0", "5"}).code == cli::kExitInvalidInput);
  CHECK(run({"period", "6", "2", "3", "--z1", "1"}).code == cli::kExitInvalidInput);
  CHECK(run({"period", "6", "2", "3", "--z1", "0,1"}).code == cli::kExitInvalidInput);
  CHECK(run({"--tolerance", "-1", "count", "6", "6"}).code == cli::kExitInvalidInput);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bounds exit 4") {
  CHECK(run({"sp-oracle", "torsion", "38"}).code == cli::kExitBoundExceeded);
  CHECK(run({"xy-enum", "6", "2", "3", "--bound", "100000000"}).code ==
        cli::kExitBoundExceeded);
  CHECK(run({"count", "9223372036854775807", "6"}).code == 0);
}

TEST_CASE("relations with negative coefficients") {
  const Outcome o = run({"locus-of-relation", "90", "2", "-27", "1", "0", "0"});
  CHECK(o.code == 0);
  CHECK(o.out == "E_90(18, 45)\n");
  CHECK(run({"locus-of-relation", "6", "0", "1", "0", "0", "0"}).code ==
        cli::kExitConditionFails);
}

TEST_CASE("period commands") {
  Json j = run_json({"solve-period", "6", "2", "3", "--tau-e", "0,1", "--tau-f", "0,1"});
  const auto rec = json::to_period(j["result"]);
  CHECK(std::abs(rec.z.z1() - Complex(0, 5)) < 1e-12);
  CHECK(std::abs(rec.z.z2() - Complex(0, 12)) < 1e-12);
  CHECK(std::abs(rec.z.z3() - Complex(0, 30)) < 1e-12);

  j = run_json({"period", "6", "2", "3", "--z1", "0,1", "--z2", "0,2.5"});
  CHECK(j["result"]["siegel"]["det_im"].get<double>() == doctest::Approx(0.25));
  CHECK(run({"period", "6", "2", "3", "--z1", "0,1", "--z2", "0,1"}).code ==
        cli::kExitConditionFails);

  j = run_json({"verify-lattice", "6", "3", "2", "--z1", "0,1", "--z2", "0,2.5"});
  CHECK(j["result"]["ex"]["member"] == true);
  CHECK(j["result"]["ey"]["exponent"] == 3);
  CHECK(j["result"]["locus"] == Json{{"d", 6}, {"m", 2}, {"n", 3}});
}

TEST_CASE("seeded output is reproducible") {
  const auto a = run({"--seed", "5", "period", "90", "18", "45"});
  const auto b = run({"--seed", "5", "period", "90", "18", "45"});
  const auto c = run({"--seed", "6", "period", "90", "18", "45"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(run({"verify-lattice", "90", "45", "36"}).out ==
        run({"verify-lattice", "90", "45", "36"}).out);
}

TEST_CASE("sp-oracle commands") {
  Json j = run_json({"sp-oracle", "transitive-g", "6", "2", "3"});
  CHECK(j["command"] == "sp-oracle transitive-g");
  CHECK(j["result"]["count"] == 12);
  CHECK(j["result"]["single_orbit"] == true);
  j = run_json({"sp-oracle", "technical1", "1", "1", "2", "2"});
  CHECK(j["result"]["pair_count"] == 144);
  j = run_json({"sp-oracle", "domination", "2", "3", "1", "3"});
  CHECK(j["result"]["holds"] == true);
  j = run_json({"sp-oracle", "allowable-k", "1", "1", "2", "2"});
  CHECK(j["result"]["quotient_order"] == 64);
  j = run_json({"sp-oracle", "division", "6", "2", "4", "0", "0"});
  CHECK(j["result"]["order"] == 3);
  j = run_json({"sp-oracle", "division", "4"});
  CHECK(j["result"]["checked"] == 256);
  j = run_json({"sp-oracle", "torsion", "12"});
  CHECK(j["result"]["holds"] == true);
  CHECK(run({"sp-oracle"}).code == cli::kExitInvalidInput);
}

TEST_CASE("every command emits a parseable envelope") {
  const std::vector<std::vector<std::string>> commands{
      {"check", "6", "2", "3"},
      {"complements", "90", "45"},
      {"decompose", "5", "35", "7"},
      {"count", "90", "45"},
      {"equation", "6", "1", "6"},
      {"xy-enum", "6", "2", "3", "--bound", "10"},
      {"locus-of-relation", "6", "1", "-5", "1", "0", "0"},
      {"period", "20", "4", "5"},
      {"solve-period", "6", "1", "6", "--tau-e", "0.5,1", "--tau-f", "-0.2,0.7"},
      {"verify-lattice", "6", "6", "5"},
      {"sp-oracle", "transitive-g", "4", "1", "1"},
      {"sp-oracle", "allowable-k", "1", "2", "3", "2"},
      {"sp-oracle", "technical1", "1", "3", "2", "3"},
      {"sp-oracle", "domination", "2", "2", "1", "1"},
      {"sp-oracle", "division", "3"},
      {"sp-oracle", "torsion", "6"}};
  for (const auto& args : commands) {
    CAPTURE(args.front());
    const Json j = run_json(args);
    REQUIRE(j["status"] == "ok");
    REQUIRE(j.size() == 5);
  }
}

TEST_CASE("json helpers") {
  CHECK(json::integer(5) == 5);
  CHECK(json::integer(Int{1} << 60) == "1152921504606846976");
  CHECK(json::to_integer(json::integer(Int{1} << 60)) == Int{1} << 60);
  CHECK(json::to_integer(Json(-7)) == -7);
  CHECK(json::to_complex(json::complex({1.5, -2})) == Complex(1.5, -2));
  CHECK_THROWS_AS(json::to_integer(Json("x")), Error);
  CHECK_THROWS_AS(json::to_relation(Json{{"d", 6},
                                         {"a", {1, -5, 1, 0, 0}},
                                         {"delta", 4},
                                         {"p", 2}}),
                  Error);
}

TEST_CASE("tolerance from the environment") {
  setenv(cli::kToleranceEnv, "1e-3", 1);
  const Outcome o = run({"--json", "verify-lattice", "6", "3", "2"});
  unsetenv(cli::kToleranceEnv);
  CHECK(o.code == 0);
  setenv(cli::kToleranceEnv, "garbage", 1);
  CHECK(run({"verify-lattice", "6", "3", "2"}).code == 0);
  unsetenv(cli::kToleranceEnv);
}
