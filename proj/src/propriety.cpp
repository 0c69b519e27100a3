#include "crscore/propriety.hpp"

#include <cmath>
#include <limits>

#include "crscore/errors.hpp"
#include "crscore/parallel.hpp"
#include "crscore/stable_sum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crscore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double neg_log(double p) { return p > 0.0 ? -std::log(p) : kInf; }

void check_same_shape(const CompetingRisksDistribution& truth,
                      const CompetingRisksDistribution& model) {
  if (!truth.same_shape(model)) {
    throw GridMismatchError(
        "expected score needs truth and model on the same grid with the "
        "same causes");
  }
}

}  // namespace

double expected_score(const CompetingRisksDistribution& truth,
                      const CensoringDistribution& censoring,
                      const CompetingRisksDistribution& model) {
  check_same_shape(truth, model);
  const JointOutcomeDistribution pi = joint_pmf(truth, censoring);
  const int t_max = truth.grid().t_max();
  const int causes = truth.num_causes();

  StableSum acc;
  for (int cause = 0; cause <= causes; ++cause) {
    for (int y = 1; y <= t_max; ++y) {
      const double p = pi.pmf(cause, y);
      if (p == 0.0) {
        continue;  // 0 * inf = 0: unreachable outcomes never contribute
      }
      const double s = cause == 0 ? neg_log(model.survivor(y))
                                  : neg_log(model.mass(cause, y));
      if (s == kInf) {
        return kInf;
      }
      acc.add(p * s);
    }
  }
  return acc.value();
}

double kl_divergence(const JointOutcomeDistribution& p,
                     const JointOutcomeDistribution& q) {
  if (!p.same_shape(q)) {
    throw GridMismatchError("KL divergence needs pmfs over the same outcomes");
  }
  const std::vector<double>& pv = p.flat();
  const std::vector<double>& qv = q.flat();

  StableSum acc;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (pv[i] == 0.0) {
      continue;
    }
    if (qv[i] == 0.0) {
      return kInf;
    }
    acc.add(pv[i] * std::log(pv[i] / qv[i]));
  }
  const double total = acc.value();
  // Enumeration rounding can leave a hair below zero; the true value is not.
  if (total < 0.0 && total >= -kGapSlack) {
    return 0.0;
  }
  return total;
}

double score_gap(const CompetingRisksDistribution& truth,
                 const CompetingRisksDistribution& model,
                 const CensoringDistribution& censoring) {
  const double self = expected_score(truth, censoring, truth);
  if (!std::isfinite(self)) {
    // Cannot happen for a validated truth (its own positive-probability
    // outcomes always have positive mass), so reaching this means a
    // broken invariant rather than a property of the inputs.
    throw IndeterminateGapError(
        "truth scores its own outcomes infinitely; gap undefined");
  }
  return expected_score(truth, censoring, model) - self;
}

namespace {

bool pmf_equal(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kPiEqualTol) {
      return false;
    }
  }
  return true;
}

CandidateCheck check_one(const CompetingRisksDistribution& truth,
                         const CensoringDistribution& censoring,
                         const JointOutcomeDistribution& pi_truth,
                         double self_score,
                         const CompetingRisksDistribution& candidate) {
  CandidateCheck out;
  out.score_gap = expected_score(truth, censoring, candidate) - self_score;

  const JointOutcomeDistribution pi_candidate = joint_pmf(candidate, censoring);
  out.kl = kl_divergence(pi_truth, pi_candidate);

  const bool gap_inf = std::isinf(out.score_gap);
  const bool kl_inf = std::isinf(out.kl);
  if (gap_inf || kl_inf) {
    out.identity_residual = gap_inf == kl_inf ? 0.0 : kInf;
  } else {
    out.identity_residual = std::abs(out.score_gap - out.kl);
  }

  out.pi_equal = pmf_equal(pi_truth.flat(), pi_candidate.flat());
  return out;
}

bool verdict_from(const std::vector<CandidateCheck>& checks) {
  for (const CandidateCheck& c : checks) {
    if (!(c.score_gap >= -kGapSlack)) {
      return false;  // negative beyond slack, or NaN
    }
    if (!(c.identity_residual <= kIdentityTol)) {
      return false;
    }
    if (c.pi_equal && !(c.score_gap <= kGapSlack)) {
      return false;  // equal pmfs must tie the truth's score
    }
  }
  return true;
}

ProprietyReport check_impl(
    const CompetingRisksDistribution& truth,
    const CensoringDistribution& censoring,
    const std::vector<CompetingRisksDistribution>& candidates, bool parallel) {
  for (const CompetingRisksDistribution& c : candidates) {
    check_same_shape(truth, c);
  }
  // Shared across candidates; also validates truth against the censoring grid.
  const JointOutcomeDistribution pi_truth = joint_pmf(truth, censoring);
  const double self_score = expected_score(truth, censoring, truth);
  if (!std::isfinite(self_score)) {
    throw IndeterminateGapError(
        "truth scores its own outcomes infinitely; gap undefined");
  }

  ProprietyReport report;
  report.candidates.resize(candidates.size());
  const std::int64_t n = static_cast<std::int64_t>(candidates.size());

#ifdef _OPENMP
  if (parallel) {
    const int threads = crscore::parallel::thread_count();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t k = 0; k < n; ++k) {
      report.candidates[static_cast<std::size_t>(k)] = check_one(
          truth, censoring, pi_truth, self_score,
          candidates[static_cast<std::size_t>(k)]);
    }
  } else
#else
  (void)parallel;
#endif
  {
    for (std::int64_t k = 0; k < n; ++k) {
      report.candidates[static_cast<std::size_t>(k)] = check_one(
          truth, censoring, pi_truth, self_score,
          candidates[static_cast<std::size_t>(k)]);
    }
  }

  report.verdict = verdict_from(report.candidates);
  return report;
}

}  // namespace

ProprietyReport check_propriety(
    const CompetingRisksDistribution& truth,
    const CensoringDistribution& censoring,
    const std::vector<CompetingRisksDistribution>& candidates) {
  return check_impl(truth, censoring, candidates, true);
}

ProprietyReport check_propriety_serial(
    const CompetingRisksDistribution& truth,
    const CensoringDistribution& censoring,
    const std::vector<CompetingRisksDistribution>& candidates) {
  return check_impl(truth, censoring, candidates, false);
}

}  // namespace crscore
