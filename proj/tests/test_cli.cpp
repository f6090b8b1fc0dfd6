#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dsr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json first_json(const std::string& text) { return nlohmann::json::parse(text.substr(0, text.find('\n'))); }

}  // namespace

TEST_CASE("classify") {
  const auto r = run({"classify", "2333555556"});
  REQUIRE(r.code == 0);
  const auto j = first_json(r.out);
  CHECK(j["verdict"] == "ProvedForcing");
  CHECK(j["rule"] == "L6.1");
  CHECK(j["oracle_checked"] == false);
  CHECK(j["sequence"] == "2,3,3,3,5,5,5,5,5,6");

  const auto o = run({"classify", "112233", "--oracle"});
  REQUIRE(o.code == 0);
  const auto k = first_json(o.out);
  CHECK(k["verdict"] == "ProvedNotForcing");
  CHECK(k["oracle_checked"] == true);
  CHECK(k.contains("witness"));

  const auto u = run({"classify", "112233"});
  CHECK(first_json(u.out)["verdict"] == "Unknown");

  const auto csv = run({"classify", "2333555556", "--format", "csv"});
  CHECK(csv.out == "sequence,verdict,rule,oracle_checked\n\"2,3,3,3,5,5,5,5,5,6\",ProvedForcing,L6.1,false\n");
}

TEST_CASE("stats") {
  const auto r = run({"stats", "6"});
  REQUIRE(r.code == 0);
  const auto line = r.out.substr(r.out.find('\n') + 1);
  CHECK(line == "6,102,88,156,128,106,152,30,34\n");
  const auto j = run({"stats", "1..2", "--format", "json"});
  CHECK(j.out.find("\"graphs\":2") != std::string::npos);
}

TEST_CASE("enumerate and generate") {
  const auto e = run({"enumerate", "2,2,2"});
  CHECK(e.code == 0);
  CHECK(e.out == "Bw\n");
  CHECK(run({"enumerate", "2333555556", "--count"}).out == "4930\n");

  const auto g = run({"generate", "2333555556", "--verify", "--baseline", "--count"});
  REQUIRE(g.code == 0);
  const auto j = first_json(g.out);
  CHECK(j["emitted"] == 4930);
  CHECK(j["collisions"] == 0);
  CHECK(j["baseline"] == 5328);
  CHECK(j["templates"].size() == 7);

  const auto stream = run({"generate", "2222"});
  CHECK(stream.code == 0);
  CHECK(stream.out == "Cr\n");

  const auto a = run({"generate", "2333555556", "--jobs", "4"});
  const auto b = run({"generate", "2333555556"});
  CHECK(a.code == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 4930);
  CHECK(a.out == b.out);
}

TEST_CASE("complete and walk") {
  const auto c = run({"complete", "A_", "1,1,2"});
  REQUIRE(c.code == 0);
  const auto j = first_json(c.out);
  CHECK(j["status"] == "Ambiguous");
  CHECK(j["deleted_degree"] == 1);

  const auto deck = run({"complete", "--deck", "Bw"});
  CHECK(deck.code == 0);
  CHECK(std::count(deck.out.begin(), deck.out.end(), '\n') == 3);
  CHECK(first_json(deck.out)["status"] == "Unique");

  const auto w1 = run({"walk", "112233", "--seed", "5"});
  const auto w2 = run({"walk", "112233", "--seed", "5"});
  CHECK(w1.code == 0);
  CHECK(w1.out == w2.out);
  CHECK(first_json(w1.out)["verdict"] == "ProvedNotForcing");
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "12x"}).code == dsr::cli::kMalformed);
  CHECK(run({"classify", "5555"}).code == dsr::cli::kMalformed);
  CHECK(run({"classify", "111"}).code == dsr::cli::kNotGraphic);
  CHECK(run({"enumerate", "111"}).code == dsr::cli::kNotGraphic);
  CHECK(run({"walk", "112233"}).code == dsr::cli::kMalformed);
  CHECK(run({"generate", "112233"}).code == dsr::cli::kNotForcing);
  CHECK(run({"complete", "D"}).code == dsr::cli::kMalformed);
  CHECK(run({"stats", "six"}).code == dsr::cli::kMalformed);
  CHECK(run({"frobnicate"}).code == dsr::cli::kMalformed);
  CHECK(run({}).code == dsr::cli::kMalformed);
}
