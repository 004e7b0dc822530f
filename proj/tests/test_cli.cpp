#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "arith/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = arith::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli verify") {
  const auto r = run({"verify", "105", "70", "15", "14", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":5,\"values\":[105,70,15,14,6],\"sum\":210,\"b\":2}\n");
  CHECK(r.err.empty());

  const auto bad = run({"verify", "2", "2", "1"});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["error"] == "not_divisor");

  const auto csv = run({"verify", "1", "2", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,b,sum,values\n3,2,6,3 2 1\n");

  CHECK(run({"verify", "0", "1"}).code == 2);
}

TEST_CASE("cli feasible") {
  const auto r = run({"feasible", "--n", "18", "--target", "79"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "infeasible");
  CHECK(j["reason"] == "search_exhausted");
  CHECK(j["witness"].is_null());

  const auto ok = run({"feasible", "--n", "14", "--target", "47", "--no-fast-paths"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["witness"]["values"][0] == 47);
}

TEST_CASE("cli count, bounds, construct") {
  const auto c = run({"count", "--n", "4"});
  CHECK(c.code == 0);
  CHECK(c.out == "{\"n\":4,\"count\":14}\n");
  CHECK(run({"count", "--n", "5", "--jobs", "3"}).out == "{\"n\":5,\"count\":147}\n");

  const auto b = run({"bounds", "--n", "3"});
  CHECK(b.code == 0);
  CHECK(b.out ==
        "{\"n\":3,\"general_bound\":3,\"general_k\":1,\"prime_bound\":3,\"prime_k\":1,"
        "\"obstruction_general_threshold\":\"4\",\"obstruction_prime_threshold\":\"13/4\"}\n");

  const auto built = run({"construct", "--n", "13", "--target", "41"});
  CHECK(built.code == 0);
  CHECK(nlohmann::json::parse(built.out)["construction"] == "quadratic");
  CHECK(run({"construct", "--n", "18", "--target", "79"}).code == 1);
}

TEST_CASE("cli enumerate and unit-fractions") {
  const auto e = run({"enumerate", "--n", "3"});
  CHECK(e.code == 0);
  CHECK(e.out ==
        "{\"n\":3,\"values\":[3,2,1],\"sum\":6,\"b\":2}\n"
        "{\"n\":3,\"values\":[2,1,1],\"sum\":4,\"b\":2}\n"
        "{\"n\":3,\"values\":[1,1,1],\"sum\":3,\"b\":3}\n");
  const auto limited = run({"enumerate", "--n", "6", "--limit", "2", "--format", "csv"});
  CHECK(std::count(limited.out.begin(), limited.out.end(), '\n') == 3);

  const auto u = run({"unit-fractions", "--n", "3"});
  CHECK(u.out.starts_with("{\"n\":3,\"denominators\":[2,3,6],\"lcm\":6}\n"));

  CHECK(run({"count", "--n", "8"}).code == 2);
}

TEST_CASE("cli prime-table formats") {
  const auto md = run({"prime-table", "--n-min", "17", "--n-max", "18", "--format", "markdown"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| 17 | p<=69 | p>73.25 | 71,73 |  |  |") != std::string::npos);
  CHECK(md.out.find("| 18 | p<=77 | p>82 |  |  | 79 |") != std::string::npos);

  const auto csv = run({"prime-table", "--n-min", "18", "--n-max", "18", "--format", "csv"});
  CHECK(csv.out == "n,yes_theorem,no_obstruction,yes_quadratic,yes_other,no_other\n"
                   "18,77,82,,,79\n");

  const auto json = run({"prime-table", "--n-min", "26", "--n-max", "27"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["cutoff_violation"]["n"] == 27);
  CHECK(j["cutoff_violation"]["infeasible"] == 179);
  CHECK(j["cutoff_violation"]["feasible"] == 181);
}

TEST_CASE("cli usage errors") {
  const auto none = run({});
  CHECK(none.code == 2);
  CHECK(none.out.empty());
  CHECK_FALSE(none.err.empty());

  CHECK(run({"feasible", "--n", "18"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"bounds", "--n", "1"}).code == 2);
  CHECK(run({"verify", "1", "--format", "markdown"}).code == 2);
  CHECK(run({"bounds", "--n", "1", "--quiet"}).err.empty());
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"feasible", "--n", "27", "--target", "179", "--no-fast-paths"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> table{"prime-table", "--n-min", "20", "--n-max", "22"};
  CHECK(run(table).out == run(table).out);
}
