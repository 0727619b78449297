#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "liepf/cli.hpp"
#include "liepf/json_io.hpp"

using namespace liepf;
using json_io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json load_golden() {
  std::ifstream file(LIEPF_GOLDEN_PATH);
  REQUIRE(file.good());
  return json::parse(file);
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(LIEPF_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("golden CLI outputs") {
  json golden = load_golden();
  for (const auto& entry : golden["cli"]) {
    auto args = entry["args"].get<std::vector<std::string>>();
    CAPTURE(entry["args"].dump());
    Run r = run(args);
    REQUIRE(r.code == 0);
    json got = json::parse(r.out);
    for (const auto& [key, value] : entry["expect"].items()) {
      CAPTURE(key);
      CHECK(got.at(key) == value);
    }
  }
}

TEST_CASE("golden lattice indices") {
  json golden = load_golden();
  for (const auto& [name, expect] : golden["lattice_indices"].items()) {
    auto idx = lattice_indices(build_algebra(name));
    CHECK(to_string(idx.p_over_q) == std::to_string(expect["p_over_q"].get<int>()));
    CHECK(to_string(idx.q_over_qlong) == std::to_string(expect["q_over_qlong"].get<int>()));
  }
}

TEST_CASE("output is deterministic and big integers are strings") {
  const std::vector<std::vector<std::string>> commands = {
      {"e8-table", "--json"},
      {"verlinde", "B2", "--level", "3", "--genus", "2", "--label", "1,1", "--json"},
      {"roots", "F4", "--json"},
      {"min-index", "E7", "--json"}};
  for (const auto& args : commands) {
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  json table = json::parse(run({"e8-table", "--json"}).out);
  for (const auto& row : table["table"]) {
    CHECK(row["index"].is_string());
    CHECK(row["dim"].is_string());
  }
  CHECK(json::parse(run(commands[1]).out)["dimension"].is_string());
}

TEST_CASE("table output") {
  Run r = run({"index", "A1", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  CHECK(run({"verlinde", "A1", "--level", "1", "--genus", "2"}).out == "4\n");
  CHECK(run({"alcove", "A1", "--level", "2"}).out.find("3 weights") != std::string::npos);
}

TEST_CASE("pfaffian subcommand") {
  std::string good = write_temp("pf_good.json", R"({"n":4,"entries":[[0,"1/2",2,3],["-1/2",0,4,5],[-2,-4,0,6],[-3,-5,-6,0]]})");
  Run r = run({"pfaffian", good, "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["pfaffian"] == "5");
  CHECK(j["det"] == "25");
  std::string bad = write_temp("pf_bad.json", R"({"n":2,"entries":[[0,1],[1,0]]})");
  Run nonskew = run({"pfaffian", bad});
  CHECK(nonskew.code == 1);
  CHECK(nonskew.err.find("skew") != std::string::npos);
  CHECK(run({"pfaffian", write_temp("pf_odd.json", R"({"n":1,"entries":[[0]]})")}).code == 1);
  CHECK(run({"pfaffian", write_temp("pf_junk.json", "not json")}).code == 1);
  CHECK(run({"pfaffian", "/nonexistent/matrix.json"}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"index", "A2"}).code == 2);
  CHECK(run({"index", "A2", "1,0", "--method", "magic"}).code == 2);
  CHECK(run({"verlinde", "A2", "--genus", "1"}).code == 2);
  CHECK(run({"index", "E9", "1"}).code == 1);
  CHECK(run({"index", "A2", "1"}).code == 1);
  CHECK(run({"index", "A2", "-1,0"}).code == 1);
  CHECK(run({"verlinde", "A2", "--level", "1", "--genus", "1", "--label", "2,0"}).code == 1);
  CHECK(run({"verlinde", "A2", "--level", "1", "--genus", "1", "--prec", "32"}).code == 1);
  CHECK(run({"char-group", "A2", "--sigma", "3"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precision can come from the environment") {
  ::setenv(kPrecisionEnv, "200", 1);
  Run r = run({"verlinde", "B2", "--level", "2", "--genus", "2", "--json"});
  ::unsetenv(kPrecisionEnv);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["dimension"] ==
        json::parse(run({"verlinde", "B2", "--level", "2", "--genus", "2", "--json"}).out)["dimension"]);
}

TEST_CASE("caps are configurable") {
  CHECK(run({"--weight-cap", "2", "alcove", "A3", "--level", "3"}).code == 1);
  CHECK(run({"index", "A3", "2,2,2", "--method", "sum", "--weight-cap", "3"}).code == 1);
}
