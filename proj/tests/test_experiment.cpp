#include <cmath>

#include "doctest.h"
#include "indseq/errors.hpp"
#include "indseq/experiment.hpp"
#include "indseq/json_io.hpp"
#include "oracles.hpp"

using namespace indseq;

TEST_CASE("p schedules") {
  CHECK(PSpec{PSpec::Kind::kFixed, 0.25}.evaluate(10) == 0.25);
  CHECK(parse_schedule("delta-constant:0.3").evaluate(50) == 0.3);
  CHECK(parse_schedule("sqrt-log:1").evaluate(16) ==
        doctest::Approx(std::sqrt(std::log(16.0) / 16)));
  CHECK(parse_schedule("connectivity:0").evaluate(20) ==
        doctest::Approx((std::log(20.0) + std::log(std::log(20.0))) / 20));
  CHECK(parse_schedule("sqrt-log:2").describe() == "sqrt-log:2");
  CHECK_THROWS_AS(parse_schedule("sqrt-log"), ParseError);
  CHECK_THROWS_AS(parse_schedule("linear:1"), ParseError);
  CHECK_THROWS_AS(parse_schedule("sqrt-log:1x"), ParseError);
  CHECK_THROWS_AS(parse_schedule("sqrt-log:9").evaluate(4), PreconditionError);
  CHECK_THROWS_AS(parse_schedule("connectivity:0").evaluate(1), PreconditionError);
}

TEST_CASE("complete bipartite samples at p = 1") {
  ExperimentConfig c;
  c.n = 10;
  c.p = {PSpec::Kind::kFixed, 1.0};
  const ExperimentResult r = run_experiment(c);
  REQUIRE(r.samples.size() == 1);
  const auto& s = r.samples[0];
  REQUIRE(s.sequence);
  CHECK((*s.sequence)[0] == 1);
  for (int t = 1; t <= 10; ++t) CHECK((*s.sequence)[t] == 2 * oracle::pascal(10, t));
  CHECK(s.verdict->unimodal);
  CHECK(s.verdict->modes == std::vector<std::size_t>{5});
  CHECK(*s.sandwich);
  CHECK(s.K == 1);
}

TEST_CASE("empty graph samples at p = 0") {
  ExperimentConfig c;
  c.n = 12;
  c.p = {PSpec::Kind::kFixed, 0.0};
  c.samples = 3;
  const ExperimentResult r = run_experiment(c);
  for (const auto& s : r.samples) {
    for (int t = 0; t <= 24; ++t) CHECK((*s.sequence)[t] == oracle::pascal(24, t));
    CHECK(s.verdict->unimodal);
    CHECK(s.verdict->logconcave_from == 0);
    CHECK_FALSE(s.properties.has_value());  // d = 0
  }
}

TEST_CASE("results do not depend on the worker count") {
  ExperimentConfig c;
  c.n = 9;
  c.p = {PSpec::Kind::kFixed, 0.5};
  c.samples = 17;
  c.seed = 99;
  c.workers = 1;
  const std::string one = to_json(run_experiment(c)).dump();
  c.workers = 5;
  CHECK(to_json(run_experiment(c)).dump() == one);
  c.workers = 64;
  CHECK(to_json(run_experiment(c)).dump() == one);
  c.seed = 100;
  CHECK(to_json(run_experiment(c)).dump() != one);
}

TEST_CASE("records are ordered by stream and rates add up") {
  ExperimentConfig c;
  c.n = 8;
  c.p = {PSpec::Kind::kFixed, 0.4};
  c.samples = 10;
  c.workers = 3;
  const ExperimentResult r = run_experiment(c);
  for (std::size_t i = 0; i < r.samples.size(); ++i) CHECK(r.samples[i].stream == i);
  for (const auto& rate : r.rates) {
    CHECK(rate.holding <= rate.applicable);
    CHECK(rate.applicable <= 10);
  }
  CHECK(r.prefix_target == 0);
}

TEST_CASE("bounds-only mode and preconditions") {
  ExperimentConfig c;
  c.n = 20;
  c.p = parse_schedule("connectivity:1");
  c.samples = 2;
  c.bounds_only = true;
  const ExperimentResult r = run_experiment(c);
  CHECK_FALSE(r.exact);
  CHECK_FALSE(r.samples[0].sequence.has_value());
  CHECK(r.samples[0].properties.has_value());

  c.bounds_only = false;
  CHECK_THROWS_AS(run_experiment(c), PreconditionError);
  c.n = 5;
  c.samples = 0;
  CHECK_THROWS_AS(run_experiment(c), PreconditionError);
}

TEST_CASE("csv has one line per sample") {
  ExperimentConfig c;
  c.n = 6;
  c.samples = 4;
  const std::string csv = to_csv(run_experiment(c));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
