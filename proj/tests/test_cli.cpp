#include <doctest.h>

#include <sstream>

#include "frobenius/cli.hpp"
#include "frobenius/json_io.hpp"

using namespace frob;
using frob::json::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, const std::string& input = "") {
  auto r = run(std::move(args), input);
  REQUIRE_MESSAGE(r.status == 0, r.err);
  return Json::parse(r.out);
}

SymFunc parse_sf(const std::string& text) { return json::symfunc_from_json(Json::parse(text)); }

}  // namespace

TEST_CASE("character: klein in the Schur basis is byte-exact") {
  const auto r = run({"character", "--builtin", "klein", "--basis", "s"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"basis\":\"s\",\"degree\":4,\"terms\":[{\"partition\":[4],\"coeff\":\"1\"},"
        "{\"partition\":[2,2],\"coeff\":\"1\"}]}\n");
  // Deterministic across runs.
  CHECK(run({"character", "--builtin", "klein", "--basis", "s"}).out == r.out);
}

TEST_CASE("character: trivial action has one orbit per mu") {
  const auto j = run_json({"character", "--builtin", "trivial:3", "--basis", "m"});
  REQUIRE(j["terms"].size() == 3);
  for (const auto& t : j["terms"]) CHECK(t["coeff"] == "1");
}

TEST_CASE("character: both routes agree") {
  const auto j = run_json({"character", "--builtin", "natural:4", "--basis", "m", "--route", "both"});
  CHECK(j["equal"] == true);
  CHECK(j["fixedpoints"] == j["orbits"]);
  const auto k = run_json({"character", "--builtin", "subsets:5:2", "--basis", "s", "--route", "both"});
  CHECK(k["equal"] == true);
}

TEST_CASE("character: action JSON from stdin") {
  const std::string klein = R"({"n":4,"m":3,"gens":[[2,1,3],[1,3,2],[2,1,3]]})";
  const auto j = run_json({"character", "--action", "-", "--basis", "s"}, klein);
  CHECK(parse_sf(j.dump()).same_terms(
      SymFunc::from_terms(Basis::S, {{Partition{4}, Rational(1)}, {Partition{2, 2}, Rational(1)}})));
  // Round trip through the action serialiser.
  CHECK(json::to_json(json::action_from_json(Json::parse(klein))).dump() == klein);
}

TEST_CASE("character: error paths") {
  auto syntax = run({"character", "--action", "-"}, R"({"n":4,"m")");
  CHECK(syntax.status != 0);
  CHECK(syntax.err.rfind("error: parse error", 0) == 0);
  CHECK(syntax.err.find("byte") != std::string::npos);
  CHECK(std::count(syntax.err.begin(), syntax.err.end(), '\n') == 1);

  auto relation = run({"character", "--action", "-"}, R"({"n":3,"m":3,"gens":[[2,3,1],[1,3,2]]})");
  CHECK(relation.status != 0);
  CHECK(relation.err == "error: action violates relation s1^2\n");

  auto guard = run({"character", "--builtin", "parking:7"});
  CHECK(guard.status != 0);
  CHECK(guard.err.find("--max-ground-set 20000") != std::string::npos);

  CHECK(run({"character", "--builtin", "bogus:2"}).status != 0);
  CHECK(run({"character"}).status != 0);
  CHECK(run({"character", "--builtin", "klein", "--basis", "q"}).err.rfind("error:", 0) == 0);
  CHECK(run({"character", "--builtin", "klein", "--route", "sideways"}).status != 0);
  CHECK(run({}).err.rfind("error:", 0) == 0);
  CHECK(run({"frobnicate"}).err.rfind("error:", 0) == 0);
}

TEST_CASE("convert: the h and e expansions of the klein character") {
  const std::string h = R"({"basis":"h","degree":4,"terms":[{"partition":[4],"coeff":"1"},)"
                        R"({"partition":[3,1],"coeff":"-1"},{"partition":[2,2],"coeff":"1"}]})";
  const auto s = run({"convert", "--to", "s"}, h);
  CHECK(s.status == 0);
  CHECK(s.out ==
        "{\"basis\":\"s\",\"degree\":4,\"terms\":[{\"partition\":[4],\"coeff\":\"1\"},"
        "{\"partition\":[2,2],\"coeff\":\"1\"}]}\n");
  const auto e = parse_sf(run({"convert", "--to", "e"}, h).out);
  CHECK(e.same_terms(SymFunc::from_terms(Basis::E, {{Partition{4}, Rational(-1)},
                                                    {Partition{3, 1}, Rational(1)},
                                                    {Partition{2, 2}, Rational(2)},
                                                    {Partition{2, 1, 1}, Rational(-3)},
                                                    {Partition{1, 1, 1, 1}, Rational(1)}})));
}

TEST_CASE("convert: canonical order, fractions and round trips") {
  const std::string m = R"({"basis":"m","degree":3,"terms":[{"partition":[1,1,1],"coeff":"3/6"},)"
                        R"({"partition":[3],"coeff":2}]})";
  const auto p = run({"convert", "--to", "p"}, m);
  REQUIRE(p.status == 0);
  const auto back = run({"convert", "--to", "m"}, p.out);
  CHECK(back.out ==
        "{\"basis\":\"m\",\"degree\":3,\"terms\":[{\"partition\":[3],\"coeff\":\"2\"},"
        "{\"partition\":[1,1,1],\"coeff\":\"1/2\"}]}\n");
  CHECK(run({"convert", "--to", "s"}, R"({"basis":"s","degree":2,"terms":[]})").out ==
        "{\"basis\":\"s\",\"degree\":2,\"terms\":[]}\n");
}

TEST_CASE("convert: inhomogeneous input names both weights") {
  const auto r = run({"convert", "--to", "p"},
                     R"({"basis":"m","degree":2,"terms":[{"partition":[2],"coeff":"1"},)"
                     R"({"partition":[3],"coeff":"1"}]})");
  CHECK(r.status != 0);
  CHECK(r.err == "error: inhomogeneous symmetric function: weights 2 and 3\n");
  const auto d = run({"convert", "--to", "p"},
                     R"({"basis":"m","degree":4,"terms":[{"partition":[2],"coeff":"1"}]})");
  CHECK(d.err == "error: inhomogeneous symmetric function: weights 4 and 2\n");
  CHECK(run({"convert", "--to", "p"}, R"({"basis":"m","terms":[{"partition":[1,2],"coeff":"1"}]})")
            .status != 0);
  CHECK(run({"convert", "--to", "p"}, R"({"basis":"m","terms":[{"partition":[2],"coeff":"1/0"}]})")
            .status != 0);
}

TEST_CASE("parking subcommand") {
  const auto count = run_json({"parking", "--n", "4", "--mode", "count"});
  CHECK(count["count"] == "125");
  CHECK(count["agree"] == true);

  const auto orbits = run_json({"parking", "--n", "2", "--mode", "orbits"});
  CHECK(orbits["orbits"] == Json::parse(R"([{"mu":[2],"orbits":"2"},{"mu":[1,1],"orbits":"3"}])"));

  const auto verify = run_json({"parking", "--n", "3", "--mode", "verify"});
  CHECK(verify["all_agree"] == true);
  for (const auto& row : verify["rows"]) CHECK(row["agree"] == true);

  CHECK(run({"parking", "--n", "8", "--mode", "count"}).err.find("n <= 7") != std::string::npos);
  CHECK(run({"parking", "--n", "7", "--mode", "verify"}).status != 0);
  CHECK(run({"parking", "--n", "0"}).status != 0);
  CHECK(run({"parking", "--n", "3", "--mode", "median"}).status != 0);
}

TEST_CASE("selftest subcommand") {
  const auto r = run({"selftest", "--max-n", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("selftest: pass") != std::string::npos);
  CHECK(r.out.find("suite parking: pass") != std::string::npos);
  CHECK(run({"selftest", "--max-n", "7"}).status != 0);
}
