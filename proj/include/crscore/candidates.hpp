#pragma once

#include <cstdint>
#include <vector>

#include "crscore/distribution.hpp"

namespace crscore {

// Deterministic family of perturbed forecasts around `truth`, used to
// exercise the propriety checks from many directions: Dirichlet mixtures
// move every coordinate, cause rotations and time shifts permute mass
// without changing totals, and tail transfers trade grid mass against the
// beyond-horizon bucket. Candidate k depends only on (seed, k), so any
// prefix of the sequence is reproducible.
std::vector<CompetingRisksDistribution> make_candidates(
    const CompetingRisksDistribution& truth, int count, std::uint64_t seed);

}  // namespace crscore
