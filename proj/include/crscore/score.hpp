#pragma once

#include <vector>

#include "crscore/distribution.hpp"
#include "crscore/types.hpp"

namespace crscore {

// Logarithmic score of one censored competing-risks observation against a
// forecast, in nats. Events score -log f_j(y); censored observations
// score -log Q(T > y). A zero probability yields +infinity; that is the
// honest value, not an error. Results are never NaN and never negative.
//
// clamp_floor > 0 turns on the disclosed convenience clamp: probabilities
// below the floor are lifted to it before taking the log, so every score
// is finite. The default 0 leaves scores unclamped.
double log_score(const Observation& obs, const CompetingRisksDistribution& q,
                 double clamp_floor = 0.0);

// Per-observation scores in dataset order. The parallel kernel fans out
// across observations; each entry depends only on its own observation, so
// the output is identical to the serial reference for any thread count.
std::vector<double> score_observations(const Dataset& data,
                                       const CompetingRisksDistribution& q,
                                       double clamp_floor = 0.0);
std::vector<double> score_observations_serial(
    const Dataset& data, const CompetingRisksDistribution& q,
    double clamp_floor = 0.0);

// Arithmetic mean of the per-observation scores: +infinity as soon as any
// observation scores +infinity, and an EmptyDataset error on zero
// observations. The reduction is a compensated sum in input order, so the
// value does not depend on the thread count used for the map step.
double mean_score(const Dataset& data, const CompetingRisksDistribution& q,
                  double clamp_floor = 0.0);
double mean_score_serial(const Dataset& data,
                         const CompetingRisksDistribution& q,
                         double clamp_floor = 0.0);

}  // namespace crscore
