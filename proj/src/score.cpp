#include "crscore/score.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "crscore/parallel.hpp"
#include "crscore/stable_sum.hpp"

namespace crscore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double neg_log(double p, double clamp_floor) noexcept {
  if (clamp_floor > 0.0 && p < clamp_floor) p = clamp_floor;
  if (p <= 0.0) return kInf;
  return -std::log(p);
}

// Scoring core; callers have already validated the observation against
// the forecast's grid and cause count.
double score_unchecked(const Observation& obs,
                       const CompetingRisksDistribution& q,
                       double clamp_floor) noexcept {
  if (obs.cause >= 1) return neg_log(q.mass(obs.cause, obs.y), clamp_floor);
  return neg_log(q.survivor(obs.y), clamp_floor);
}

void check_observation(const Observation& obs,
                       const CompetingRisksDistribution& q) {
  if (obs.y < 1 || obs.y > q.grid().t_max())
    throw GridMismatchError("observation y=" + std::to_string(obs.y) +
                            " outside the forecast grid 1.." +
                            std::to_string(q.grid().t_max()));
  if (obs.cause < 0 || obs.cause > q.num_causes())
    throw CauseOutOfRangeError("observation cause=" +
                               std::to_string(obs.cause) + " outside 0.." +
                               std::to_string(q.num_causes()));
}

void check_dataset(const Dataset& data, const CompetingRisksDistribution& q) {
  if (!(data.grid() == q.grid()))
    throw GridMismatchError("dataset t_max=" +
                            std::to_string(data.grid().t_max()) +
                            " does not match forecast t_max=" +
                            std::to_string(q.grid().t_max()));
  if (data.num_causes() != q.num_causes())
    throw GridMismatchError("dataset has " +
                            std::to_string(data.num_causes()) +
                            " causes, forecast has " +
                            std::to_string(q.num_causes()));
}

double reduce_mean(const std::vector<double>& scores) {
  for (double s : scores)
    if (std::isinf(s)) return kInf;
  StableSum sum;
  for (double s : scores) sum.add(s);
  return sum.value() / static_cast<double>(scores.size());
}

}  // namespace

double log_score(const Observation& obs, const CompetingRisksDistribution& q,
                 double clamp_floor) {
  check_observation(obs, q);
  return score_unchecked(obs, q, clamp_floor);
}

std::vector<double> score_observations_serial(
    const Dataset& data, const CompetingRisksDistribution& q,
    double clamp_floor) {
  check_dataset(data, q);
  const auto& obs = data.observations();
  std::vector<double> scores(obs.size());
  for (std::size_t i = 0; i < obs.size(); ++i)
    scores[i] = score_unchecked(obs[i], q, clamp_floor);
  return scores;
}

std::vector<double> score_observations(const Dataset& data,
                                       const CompetingRisksDistribution& q,
                                       double clamp_floor) {
  check_dataset(data, q);
  const auto& obs = data.observations();
  std::vector<double> scores(obs.size());
#ifdef _OPENMP
  const int threads = parallel::thread_count();
  const std::int64_t n = static_cast<std::int64_t>(obs.size());
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i)
    scores[i] = score_unchecked(obs[i], q, clamp_floor);
#else
  for (std::size_t i = 0; i < obs.size(); ++i)
    scores[i] = score_unchecked(obs[i], q, clamp_floor);
#endif
  return scores;
}

double mean_score_serial(const Dataset& data,
                         const CompetingRisksDistribution& q,
                         double clamp_floor) {
  if (data.size() == 0)
    throw EmptyDatasetError("mean score over zero observations");
  return reduce_mean(score_observations_serial(data, q, clamp_floor));
}

double mean_score(const Dataset& data, const CompetingRisksDistribution& q,
                  double clamp_floor) {
  if (data.size() == 0)
    throw EmptyDatasetError("mean score over zero observations");
  return reduce_mean(score_observations(data, q, clamp_floor));
}

}  // namespace crscore
