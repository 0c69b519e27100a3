#include "crscore/sim.hpp"

#include <algorithm>
#include <cstddef>

#include "crscore/errors.hpp"
#include "crscore/parallel.hpp"
#include "crscore/rng.hpp"
#include "crscore/stable_sum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crscore {

namespace {

std::vector<double> cumulative(const std::vector<double>& mass) {
  std::vector<double> cum(mass.size());
  StableSum acc;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    acc.add(mass[i]);
    cum[i] = acc.value();
  }
  return cum;
}

}  // namespace

OutcomeSampler::OutcomeSampler(const CompetingRisksDistribution& truth,
                               const CensoringDistribution& censoring)
    : t_max_(truth.grid().t_max()), num_causes_(truth.num_causes()) {
  if (truth.grid() != censoring.grid()) {
    throw GridMismatchError(
        "simulation needs the forecast and censoring on the same grid");
  }
  std::vector<double> outcome_mass = truth.flat_mass();
  outcome_mass.push_back(truth.tail());
  outcome_cum_ = cumulative(outcome_mass);
  censor_cum_ = cumulative(censoring.flat_mass());
}

int OutcomeSampler::pick(const std::vector<double>& cum, double u) const {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  // u at or above the last cumulative value (rounding can leave it a hair
  // below 1) lands in the last category.
  const std::size_t idx = static_cast<std::size_t>(it - cum.begin());
  return static_cast<int>(idx < cum.size() ? idx : cum.size() - 1);
}

Observation OutcomeSampler::sample(std::uint64_t seed, std::int64_t i) const {
  const std::uint64_t base = 2 * static_cast<std::uint64_t>(i);
  const double u_outcome = rng::stream_uniform(seed, base);
  const double u_censor = rng::stream_uniform(seed, base + 1);

  const int censor_time = 1 + pick(censor_cum_, u_censor);
  const int category = pick(outcome_cum_, u_outcome);

  Observation obs;
  if (category == num_causes_ * t_max_) {
    obs.y = censor_time;  // event beyond the horizon: always censored
    obs.cause = 0;
    return obs;
  }
  const int event_time = category % t_max_ + 1;
  const int cause = category / t_max_ + 1;
  if (event_time <= censor_time) {
    obs.y = event_time;
    obs.cause = cause;
  } else {
    obs.y = censor_time;
    obs.cause = 0;
  }
  return obs;
}

namespace {

Dataset simulate_impl(const CompetingRisksDistribution& truth,
                      const CensoringDistribution& censoring, std::int64_t n,
                      std::uint64_t seed, bool parallel) {
  if (n < 1) {
    throw EmptyDatasetError("simulation needs at least one observation");
  }
  const OutcomeSampler sampler(truth, censoring);
  std::vector<Observation> rows(static_cast<std::size_t>(n));

#ifdef _OPENMP
  if (parallel) {
    const int threads = crscore::parallel::thread_count();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      rows[static_cast<std::size_t>(i)] = sampler.sample(seed, i);
    }
  } else
#else
  (void)parallel;
#endif
  {
    for (std::int64_t i = 0; i < n; ++i) {
      rows[static_cast<std::size_t>(i)] = sampler.sample(seed, i);
    }
  }
  return Dataset(truth.grid(), truth.num_causes(), std::move(rows));
}

}  // namespace

Dataset simulate_dataset(const CompetingRisksDistribution& truth,
                         const CensoringDistribution& censoring,
                         std::int64_t n, std::uint64_t seed) {
  return simulate_impl(truth, censoring, n, seed, true);
}

Dataset simulate_dataset_serial(const CompetingRisksDistribution& truth,
                                const CensoringDistribution& censoring,
                                std::int64_t n, std::uint64_t seed) {
  return simulate_impl(truth, censoring, n, seed, false);
}

JointOutcomeDistribution empirical_joint(const Dataset& data) {
  if (data.size() == 0) {
    throw EmptyDatasetError("empirical pmf of an empty dataset");
  }
  const int t_max = data.grid().t_max();
  const std::size_t cells =
      static_cast<std::size_t>(data.num_causes() + 1) * t_max;
  std::vector<double> counts(cells, 0.0);
  for (const Observation& obs : data.observations()) {
    counts[static_cast<std::size_t>(obs.cause) * t_max + (obs.y - 1)] += 1.0;
  }
  const double n = static_cast<double>(data.size());
  for (double& c : counts) {
    c /= n;
  }
  return JointOutcomeDistribution(data.grid(), data.num_causes(),
                                  std::move(counts));
}

CompetingRisksDistribution aalen_johansen(const Dataset& data) {
  if (data.size() == 0) {
    throw EmptyDatasetError("estimation from an empty dataset");
  }
  const int t_max = data.grid().t_max();
  const int causes = data.num_causes();

  // Per-time totals; at-risk counts are suffix sums over observed times.
  std::vector<std::int64_t> total_at(t_max + 1, 0);
  std::vector<std::int64_t> events(
      static_cast<std::size_t>(causes) * t_max, 0);
  for (const Observation& obs : data.observations()) {
    total_at[obs.y] += 1;
    if (obs.cause > 0) {
      events[static_cast<std::size_t>(obs.cause - 1) * t_max +
             (obs.y - 1)] += 1;
    }
  }
  std::vector<std::int64_t> at_risk(t_max + 2, 0);
  for (int t = t_max; t >= 1; --t) {
    at_risk[t] = at_risk[t + 1] + total_at[t];
  }

  std::vector<double> mass(static_cast<std::size_t>(causes) * t_max, 0.0);
  double survival = 1.0;
  for (int t = 1; t <= t_max; ++t) {
    const std::int64_t n_t = at_risk[t];
    double hazard_sum = 0.0;
    if (n_t > 0) {
      for (int j = 1; j <= causes; ++j) {
        const double h =
            static_cast<double>(
                events[static_cast<std::size_t>(j - 1) * t_max + (t - 1)]) /
            static_cast<double>(n_t);
        mass[static_cast<std::size_t>(j - 1) * t_max + (t - 1)] =
            survival * h;
        hazard_sum += h;
      }
    }
    survival *= std::max(0.0, 1.0 - hazard_sum);
  }
  return CompetingRisksDistribution(data.grid(), causes, std::move(mass),
                                    survival);
}

}  // namespace crscore
