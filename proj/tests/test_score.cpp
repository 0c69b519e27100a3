#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "crscore/distribution.hpp"
#include "crscore/errors.hpp"
#include "crscore/score.hpp"
#include "crscore/types.hpp"
#include "test_util.hpp"

using crscore::CompetingRisksDistribution;
using crscore::Dataset;
using crscore::Observation;
using crscore::TimeGrid;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Observation obs_at(int y, int cause) {
  Observation o;
  o.y = y;
  o.cause = cause;
  return o;
}

CompetingRisksDistribution point_mass_11() {
  return CompetingRisksDistribution(
      TimeGrid(1), 1, std::vector<std::vector<double>>{{1.0}}, 0.0);
}

}  // namespace

TEST_CASE("log score fixture examples") {
  const CompetingRisksDistribution p = testutil::make_pstar();
  CHECK(crscore::log_score(obs_at(2, 1), p) ==
        doctest::Approx(1.2039728043259361).epsilon(1e-12));
  CHECK(crscore::log_score(obs_at(1, 0), p) ==
        doctest::Approx(0.35667494393873245).epsilon(1e-12));

  const CompetingRisksDistribution point = point_mass_11();
  CHECK(crscore::log_score(obs_at(1, 1), point) == 0.0);
  CHECK(crscore::log_score(obs_at(1, 0), point) == kInf);
}

TEST_CASE("zero probability is infinity, not an error or NaN") {
  const CompetingRisksDistribution q(
      TimeGrid(2), 1, std::vector<std::vector<double>>{{0.0, 1.0}}, 0.0);
  const double s = crscore::log_score(obs_at(1, 1), q);
  CHECK(std::isinf(s));
  CHECK(s > 0);
  CHECK(!std::isnan(crscore::log_score(obs_at(2, 0), q)));
}

TEST_CASE("clamp floors the probability before the log") {
  const CompetingRisksDistribution point = point_mass_11();
  CHECK(crscore::log_score(obs_at(1, 0), point, 1e-6) ==
        doctest::Approx(-std::log(1e-6)).epsilon(1e-12));
  // above the floor the clamp is a no-op
  const CompetingRisksDistribution p = testutil::make_pstar();
  CHECK(crscore::log_score(obs_at(2, 1), p, 1e-6) ==
        crscore::log_score(obs_at(2, 1), p));
}

TEST_CASE("log score matches the oracle on random inputs") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 300; ++rep) {
    const int t_max = 1 + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % 3);
    const auto q = testutil::random_distribution(rng, t_max, m, 0.05);
    const Observation o =
        obs_at(1 + static_cast<int>(rng() % t_max),
               static_cast<int>(rng() % (m + 1)));
    CHECK(std::abs(crscore::log_score(o, q) - testutil::oracle_log_score(o, q)) <=
          1e-12);
  }
}

TEST_CASE("M=1 reduces to the survival log score") {
  // -delta log f(y) - (1-delta) log S(y), coded independently
  std::mt19937_64 rng(4242);
  for (int rep = 0; rep < 200; ++rep) {
    const int t_max = 1 + static_cast<int>(rng() % 6);
    const auto q = testutil::random_distribution(rng, t_max, 1, 0.05);
    const int y = 1 + static_cast<int>(rng() % t_max);
    const int delta = static_cast<int>(rng() % 2);

    double survival = 1.0;
    for (int t = 1; t <= y; ++t) {
      survival -= q.mass(1, t);
    }
    const double expected =
        delta == 1 ? -std::log(q.mass(1, y)) : -std::log(survival);
    CHECK(std::abs(crscore::log_score(obs_at(y, delta), q) - expected) <=
          1e-12);
  }
}

TEST_CASE("score validates the observation against the forecast") {
  const CompetingRisksDistribution p = testutil::make_pstar();
  CHECK_THROWS_AS(crscore::log_score(obs_at(3, 1), p),
                  crscore::GridMismatchError);
  CHECK_THROWS_AS(crscore::log_score(obs_at(0, 1), p),
                  crscore::GridMismatchError);
  CHECK_THROWS_AS(crscore::log_score(obs_at(1, 3), p),
                  crscore::CauseOutOfRangeError);
  CHECK_THROWS_AS(crscore::log_score(obs_at(1, -1), p),
                  crscore::CauseOutOfRangeError);
}

TEST_CASE("mean score fixture") {
  const CompetingRisksDistribution p = testutil::make_pstar();
  const Dataset data(p.grid(), p.num_causes(), {obs_at(2, 1), obs_at(1, 0)});
  CHECK(crscore::mean_score(data, p) ==
        doctest::Approx(0.7803238741323342).epsilon(1e-12));
}

TEST_CASE("mean of identical observations equals the single score") {
  const CompetingRisksDistribution p = testutil::make_pstar();
  const Dataset data(p.grid(), p.num_causes(),
                     std::vector<Observation>(17, obs_at(2, 2)));
  CHECK(crscore::mean_score(data, p) == crscore::log_score(obs_at(2, 2), p));
}

TEST_CASE("one infinite score absorbs the mean") {
  const CompetingRisksDistribution q(
      TimeGrid(2), 1, std::vector<std::vector<double>>{{0.0, 1.0}}, 0.0);
  const Dataset data(q.grid(), 1, {obs_at(2, 1), obs_at(1, 1)});
  CHECK(crscore::mean_score(data, q) == kInf);
  CHECK(!std::isnan(crscore::mean_score(data, q)));
}

TEST_CASE("empty dataset cannot be averaged") {
  const CompetingRisksDistribution p = testutil::make_pstar();
  const Dataset data(p.grid(), p.num_causes(), {});
  CHECK_THROWS_AS(crscore::mean_score(data, p), crscore::EmptyDatasetError);
}

TEST_CASE("dataset and forecast must agree on grid and causes") {
  const CompetingRisksDistribution p = testutil::make_pstar();
  const Dataset wrong_m(p.grid(), 1, {obs_at(1, 1)});
  CHECK_THROWS_AS(crscore::mean_score(wrong_m, p),
                  crscore::GridMismatchError);
  const Dataset wrong_grid(TimeGrid(3), 2, {obs_at(1, 1)});
  CHECK_THROWS_AS(crscore::score_observations(wrong_grid, p),
                  crscore::GridMismatchError);
}

TEST_CASE("per-observation scores line up with individual calls") {
  std::mt19937_64 rng(31337);
  const auto q = testutil::random_distribution(rng, 4, 2, 0.05);
  std::vector<Observation> rows;
  for (int i = 0; i < 257; ++i) {
    rows.push_back(obs_at(1 + static_cast<int>(rng() % 4),
                          static_cast<int>(rng() % 3)));
  }
  const Dataset data(q.grid(), 2, rows);
  const std::vector<double> scores = crscore::score_observations(data, q);
  REQUIRE(scores.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(scores[i] == crscore::log_score(rows[i], q));
  }
}
