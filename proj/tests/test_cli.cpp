#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "indseq/cli.hpp"
#include "indseq/json_io.hpp"

using namespace indseq;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json data(const Run& r) {
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("poly") {
  const Json j = data(run({"poly", "join(union(K4,K4,K4),K37)"}));
  CHECK(j["schema"] == "indseq/1");
  CHECK(j["sequence"].dump() == R"(["1","49","48","64"])");
  CHECK(j["verdict"]["unimodal"] == false);
  CHECK(data(run({"poly", "path(5)"}))["total"] == "13");
  CHECK(data(run({"poly", "cycle(5)"}))["sequence"].dump() == R"(["1","5","5"])");
  CHECK(data(run({"poly", "Dhc"}))["sequence"].dump() == R"(["1","5","5"])");
  CHECK(run({"poly", "C5", "--format", "csv"}).out == "t,i_t\n0,1\n1,5\n2,5\n");
}

TEST_CASE("poly from a file") {
  const std::string path = "indseq_cli_graph.g6";
  std::ofstream(path) << ">>graph6<<Dhc\n";
  CHECK(data(run({"poly", "--file", path}))["n"] == 5);
  std::remove(path.c_str());
  CHECK(run({"poly", "--file", "/nonexistent/x"}).code == kExitFailure);
}

TEST_CASE("extremal, enumerate and bounds") {
  const Json e = data(run({"extremal", "--n", "5", "--delta", "2"}));
  CHECK(e["max_value"] == "11/1");
  CHECK(e["maximizers"].size() == 2);
  CHECK(e["unique"] == false);

  const Json w = data(run({"extremal", "--n", "6", "--delta", "2", "--x", "1/2"}));
  CHECK(w["objective"] == "P(G,x=1/2)");
  CHECK(w.contains("thresholds"));

  const Json probe = data(run({"extremal", "--n", "4", "--delta", "2", "--probe-to", "6"}));
  CHECK(probe["probe"]["any_counterexample"] == false);

  const Run en = run({"enumerate", "--n", "4", "--delta", "1"});
  CHECK(en.code == 0);
  CHECK(std::count(en.out.begin(), en.out.end(), '\n') == 7);

  const Json b = data(run({"bounds", "--family", "complete", "--n", "6"}));
  CHECK(b["profile"]["K"] == 1);
  CHECK(b["profile"]["m"].dump() == "[0,0,0,0,0,0]");
  CHECK(b["sandwich"]["holds"] == true);
  for (const auto& row : b["sandwich"]["rows"]) {
    CHECK(row["count"] == row["lower"]);
  }
  const Json lit = data(run({"bounds", R"({"n":2,"rows":["0x1","0x2"]})"}));
  CHECK(lit["profile"]["K"] == 2);
  const Json sampled = data(run({"bounds", "--n", "8", "--p", "0.5", "--seed", "3"}));
  CHECK(sampled["properties"].is_object());
}

TEST_CASE("random is worker independent") {
  const std::vector<std::string> base{"random", "--n", "10", "--p", "0.5",
                                      "--samples", "20", "--seed", "4"};
  auto with = [&](const char* w) {
    auto args = base;
    args.insert(args.end(), {"--workers", w});
    return run(args);
  };
  const Run one = with("1");
  CHECK(one.code == 0);
  CHECK(with("8").out == one.out);
  CHECK(data(one)["samples"].size() == 20);
  CHECK(data(run({"random", "--n", "13", "--p-schedule", "sqrt-log:1", "--samples", "2"}))
            ["config"]["p_spec"] == "sqrt-log:1");
}

TEST_CASE("output file holds the data, stdout stays empty") {
  const std::string path = "indseq_cli_out.json";
  const Run r = run({"poly", "C5", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(Json::parse(text.str())["schema"] == "indseq/1");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({"poly", "path(5"}).code == kExitParse);
  CHECK(run({"poly", "C5", "--format", "xml"}).code == kExitParse);
  CHECK(run({"random", "--n", "5", "--p", "0.5", "--p-schedule", "sqrt-log:1"}).code ==
        kExitParse);
  CHECK(run({"bounds", R"({"n":2)"}).code == kExitParse);

  const Run budget = run({"poly", "P40", "--budget-nodes", "3"});
  CHECK(budget.code == kExitBudget);
  CHECK(budget.out.empty());
  CHECK_FALSE(budget.err.empty());
  CHECK(run({"extremal", "--n", "9", "--delta", "3"}).code == kExitBudget);

  CHECK(run({"poly", "K65"}).code == kExitPrecondition);
  CHECK(run({"random", "--n", "5", "--p", "1.5"}).code == kExitPrecondition);
  CHECK(run({"random", "--n", "20", "--p", "0.5"}).code == kExitPrecondition);
  CHECK(run({"extremal", "--n", "5", "--delta", "5"}).code == kExitPrecondition);

  CHECK(run({"--help"}).code == kExitOk);
}
