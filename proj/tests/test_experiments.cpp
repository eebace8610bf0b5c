#include <cmath>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "sqperc/experiments.hpp"

using namespace sqperc;
using test::kind_of;

TEST_CASE("expected isolated T1 vertices") {
  CHECK(expected_isolated_t1(4, 0.0) == doctest::Approx(6.0));
  CHECK(expected_isolated_t1(500, 0.0) == doctest::Approx(124750.0));
  CHECK(expected_isolated_t1(500, 1.0) == 0.0);
  CHECK(expected_isolated_t1(2, 0.3) == doctest::Approx(0.7));
  // C(500,2) (1-p) (1-p^2)^498 at p = 0.1115.
  const double direct = 124750.0 * (1 - 0.1115) * std::pow(1 - 0.1115 * 0.1115, 498);
  CHECK(expected_isolated_t1(500, 0.1115) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(expected_isolated_t1(500, 0.1115) == doctest::Approx(218.28).epsilon(1e-3));
  CHECK(kind_of([] { expected_isolated_t1(1, 0.5); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { expected_isolated_t1(5, 1.5); }) == ErrorKind::InvalidProbability);
}

TEST_CASE("expected non-bonded squares") {
  CHECK(expected_nonbonded_squares(4, 0.5) == doctest::Approx(3.0 / 64));
  CHECK(expected_nonbonded_squares(50, 0.0) == 0.0);
  CHECK(expected_nonbonded_squares(50, 1.0) == 0.0);
  const double p = 0.15;
  const double c4 = 300.0 * 299 * 298 * 297 / 24;
  const double direct = c4 * 3 * std::pow(p, 4) * std::pow(1 - p, 2) * std::pow(1 - 2 * p * p * (1 - p * p), 296);
  CHECK(expected_nonbonded_squares(300, p) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(expected_nonbonded_squares(300, p) == doctest::Approx(0.5985).epsilon(2e-3));
  CHECK(kind_of([] { expected_nonbonded_squares(3, 0.5); }) == ErrorKind::InvalidParams);
}

TEST_CASE("threshold scaling") {
  CHECK(threshold_p(0.0, 1024) == 0.0);
  CHECK(threshold_p(1.0, 1024) == doctest::Approx(0.0823).epsilon(1e-3));
  CHECK(threshold_p(1.0, 3) == doctest::Approx(std::sqrt(std::log(3.0) / 3)));
  CHECK(kind_of([] { threshold_p(5.0, 3); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { threshold_p(-1.0, 100); }) == ErrorKind::OutOfRange);
}

TEST_CASE("metric names") {
  for (Metric m : kAllMetrics) {
    CHECK(parse_metric(metric_name(m)) == m);
    CHECK(parse_metric(metric_column(m)) == m);
  }
  CHECK_FALSE(parse_metric("nope"));
  CHECK(is_boolean(Metric::SConnected));
  CHECK_FALSE(is_boolean(Metric::IsolatedT1));
}

TEST_CASE("single trials") {
  const std::vector<Metric> all(std::begin(kAllMetrics), std::end(kAllMetrics));
  const auto seed = derive_trial_seed(99, 4);
  const auto r = run_trial(40, 0.3, std::nullopt, seed, all);
  CHECK(r == run_trial(40, 0.3, std::nullopt, seed, all));
  CHECK(r.num_edges + r.num_non_edges == pair_count(40));
  CHECK(r.seed == seed.key);
  REQUIRE(r.isolated);
  REQUIRE(r.no_common_neighbour);
  CHECK(*r.no_common_neighbour <= *r.isolated);
  CHECK(r.diam_le2.has_value());
  CHECK(r.t1_diameter.has_value());

  const auto only = run_trial(40, 0.3, std::nullopt, seed, {Metric::NumSquares});
  CHECK(only.num_squares == r.num_squares);
  CHECK_FALSE(only.isolated);
  CHECK_FALSE(only.s_connected);

  const auto complete = run_trial(10, 1.0, std::nullopt, seed, all);
  CHECK(complete.t1_empty);
  CHECK(complete.t1_connected == true);
  CHECK(metric_value(complete, Metric::T1Diameter) == 0.0);  // empty T1 counts as diameter 0
}

TEST_CASE("sweep") {
  ExperimentConfig cfg;
  cfg.n = 30;
  cfg.p_spec = ExplicitP{{0.3}};
  cfg.trials = 1;
  cfg.master_seed = 5;
  cfg.metrics = {Metric::SConnected, Metric::IsolatedT1};

  SUBCASE("one point, one trial") {
    const auto t = sweep(cfg);
    REQUIRE(t.rows.size() == 1);
    REQUIRE(t.raw.size() == 1);
    CHECK(t.rows[0].get("s_connected_freq") == (*t.raw[0].s_connected ? 1.0 : 0.0));
    CHECK(t.rows[0].get("isolated_mean") == static_cast<double>(*t.raw[0].isolated));
    CHECK_FALSE(t.rows[0].get("isolated_sd"));  // undefined with one trial
    CHECK(t.aggregate_header ==
          std::vector<std::string>{"n", "p", "c", "trials", "s_connected_freq", "isolated_mean", "isolated_sd",
                                   "isolated_max"});
  }

  SUBCASE("worker count does not change output") {
    cfg.p_spec = ScaledC{{0.8, 1.0, 1.2}};
    cfg.trials = 7;
    cfg.workers = 1;
    const auto one = sweep(cfg);
    cfg.workers = 3;
    const auto three = sweep(cfg);
    CHECK(one.raw == three.raw);
    CHECK(aggregate_csv(one) == aggregate_csv(three));
    CHECK(raw_csv(one.raw) == raw_csv(three.raw));
    CHECK(one.rows.size() == 3);
    CHECK(one.raw.size() == 21);
    CHECK(one.rows[1].c == 1.0);
    CHECK(one.rows[1].p == doctest::Approx(threshold_p(1.0, 30)));
  }

  SUBCASE("invalid configurations") {
    cfg.trials = 0;
    CHECK(kind_of([&] { sweep(cfg); }) == ErrorKind::InvalidParams);
    cfg.trials = 1;
    cfg.p_spec = ExplicitP{{1.2}};
    CHECK(kind_of([&] { sweep(cfg); }) == ErrorKind::InvalidProbability);
    cfg.p_spec = ExplicitP{};
    CHECK(kind_of([&] { sweep(cfg); }) == ErrorKind::InvalidParams);
    cfg.p_spec = ExplicitP{{0.5}};
    cfg.metrics.clear();
    CHECK(kind_of([&] { sweep(cfg); }) == ErrorKind::InvalidParams);
  }
}

TEST_CASE("CSV and JSON layout") {
  ExperimentConfig cfg;
  cfg.n = 20;
  cfg.p_spec = ExplicitP{{0.2, 0.6}};
  cfg.trials = 3;
  cfg.master_seed = 1;
  cfg.metrics = {Metric::T1Connected, Metric::NonBondedCount};
  const auto t = sweep(cfg);
  const std::string raw = raw_csv(t.raw);
  CHECK(raw.rfind(std::string(kRawCsvHeader) + "\n", 0) == 0);
  CHECK(std::string(kRawCsvHeader) ==
        "n,p,c,trial,seed,num_edges,num_non_edges,num_squares,num_components,num_nontrivial,largest,"
        "second_largest,isolated,t1_connected,s_connected,non_bonded,diam_le2");
  CHECK(std::count(raw.begin(), raw.end(), '\n') == 7);
  const std::string agg = aggregate_csv(t);
  CHECK(std::count(agg.begin(), agg.end(), '\n') == 3);
  const auto j = aggregate_json(t);
  CHECK(j["schema_version"] == 1);
  CHECK(j["rows"].size() == 2);
  CHECK(raw_json(t.raw)["records"].size() == 6);
}

TEST_CASE("crossing estimate") {
  CHECK(kind_of([] { estimate_crossing(64, Metric::SConnected, 1.5, 0.5, 4, 1); }) == ErrorKind::BracketInvalid);
  CHECK(kind_of([] { estimate_crossing(64, Metric::IsolatedT1, 0.5, 1.5, 4, 1); }) == ErrorKind::InvalidParams);
  // Frequencies at both ends do not straddle 1/2.
  CHECK(kind_of([] { estimate_crossing(256, Metric::SConnected, 2.0, 2.5, 10, 1); }) == ErrorKind::BracketInvalid);

  const auto e = estimate_crossing(256, Metric::SConnected, 0.4, 2.0, 20, 7, 0.05);
  CHECK(e.estimate > 0.5);
  CHECK(e.estimate < 1.6);
  CHECK(e.evaluations.size() >= 3);
}

TEST_CASE("presets") {
  CHECK(presets().size() >= 4);
  for (const auto& p : presets()) {
    CHECK_NOTHROW(validate(p.config));
    CHECK(find_preset(p.name) == &p);
  }
  CHECK(find_preset("missing") == nullptr);
}
