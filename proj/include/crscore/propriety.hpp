#pragma once

#include <vector>

#include "crscore/distribution.hpp"
#include "crscore/joint.hpp"

namespace crscore {

// Tolerances used by the certification harness. Enumeration over the
// finite outcome space is exact up to rounding on (M+1)*t_max terms, so
// these are rounding allowances, not model error.
inline constexpr double kIdentityTol = 1e-10;  // |score gap - KL|
inline constexpr double kGapSlack = 1e-12;     // negative slack on the gap
inline constexpr double kPiEqualTol = 1e-12;   // entrywise pmf equality

// Exact expected score E[s((Y, cause), model)] when data are generated by
// `truth` under censoring `censoring`: a full enumeration of the outcome
// space with the convention 0 * inf = 0, so outcomes the truth cannot
// produce contribute nothing even if the model scores them infinitely.
// Returns +infinity iff some outcome has positive probability under the
// truth and an infinite model score.
double expected_score(const CompetingRisksDistribution& truth,
                      const CensoringDistribution& censoring,
                      const CompetingRisksDistribution& model);

// Kullback-Leibler divergence sum p*log(p/q) over the outcome space, with
// 0*log(0/q) = 0 and +infinity when p has mass where q has none. Rounding
// slack below zero is clamped to zero; the mathematical value is
// nonnegative and zero only for entrywise-equal pmfs.
double kl_divergence(const JointOutcomeDistribution& p,
                     const JointOutcomeDistribution& q);

// expected_score(truth, censoring, model) minus the truth's own expected
// score. Equals the KL divergence between the induced outcome pmfs; both
// routes are computed independently so tests can compare them.
double score_gap(const CompetingRisksDistribution& truth,
                 const CompetingRisksDistribution& model,
                 const CensoringDistribution& censoring);

struct CandidateCheck {
  double score_gap = 0.0;
  double kl = 0.0;
  // |score_gap - kl| when both are finite; 0 when both are infinite
  // (consistent); +infinity when exactly one is (inconsistent).
  double identity_residual = 0.0;
  // Entrywise equality of the induced outcome pmfs within kPiEqualTol.
  // Distinct forecasts can induce identical pmfs when the censoring
  // distribution hides part of the grid; such candidates are flagged
  // rather than counted as strictness failures.
  bool pi_equal = false;
};

struct ProprietyReport {
  std::vector<CandidateCheck> candidates;  // in input order
  bool verdict = false;
};

// Evaluates every candidate forecast against the truth: score gap via the
// expected-score route, KL via direct enumeration, their residual, and
// pmf equality. Verdict is true iff every finite gap is >= -kGapSlack,
// every residual is <= kIdentityTol, and pi-equal candidates have gap
// <= kGapSlack. The parallel kernel fans out across candidates and the
// report preserves input order.
ProprietyReport check_propriety(
    const CompetingRisksDistribution& truth,
    const CensoringDistribution& censoring,
    const std::vector<CompetingRisksDistribution>& candidates);
ProprietyReport check_propriety_serial(
    const CompetingRisksDistribution& truth,
    const CensoringDistribution& censoring,
    const std::vector<CompetingRisksDistribution>& candidates);

}  // namespace crscore
