#pragma once

#include <cstdint>
#include <vector>

#include "crscore/distribution.hpp"
#include "crscore/joint.hpp"
#include "crscore/types.hpp"

namespace crscore {

// Inverse-CDF sampler for the censored observation scheme: draw (T, J)
// from the forecast (tail = beyond-horizon), draw C from the censoring
// distribution, and report the event when T <= C (ties observed as
// events) or a censored row at C otherwise. Observation i uses counters
// 2i and 2i+1 of the seed's stream, so any subset of rows can be
// regenerated independently and in parallel.
class OutcomeSampler {
 public:
  OutcomeSampler(const CompetingRisksDistribution& truth,
                 const CensoringDistribution& censoring);

  Observation sample(std::uint64_t seed, std::int64_t i) const;

 private:
  int t_max_;
  int num_causes_;
  // Cumulative outcome table, cause-major with the tail as the final
  // category; cumulative censoring table over 1..t_max.
  std::vector<double> outcome_cum_;
  std::vector<double> censor_cum_;

  int pick(const std::vector<double>& cum, double u) const;
};

// n observations from the scheme above. The parallel kernel fills rows
// by index and is bit-identical to the serial one for any thread count.
Dataset simulate_dataset(const CompetingRisksDistribution& truth,
                         const CensoringDistribution& censoring,
                         std::int64_t n, std::uint64_t seed);
Dataset simulate_dataset_serial(const CompetingRisksDistribution& truth,
                                const CensoringDistribution& censoring,
                                std::int64_t n, std::uint64_t seed);

// Empirical pmf of (cause, y) over the dataset's outcome space.
JointOutcomeDistribution empirical_joint(const Dataset& data);

// Discrete Aalen-Johansen estimate of the cause-specific mass function:
// cause-j hazard d_j(t) / n(t) among the n(t) still at risk, survival by
// telescoping, tail = estimated survival past the horizon. Rows censored
// at t leave the risk set after t. The result is a valid forecast and
// reproduces the empirical subdistribution exactly when no row is
// censored.
CompetingRisksDistribution aalen_johansen(const Dataset& data);

}  // namespace crscore
