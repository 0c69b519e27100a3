#include "crscore/candidates.hpp"

#include <cmath>
#include <cstddef>

#include "crscore/rng.hpp"
#include "crscore/stable_sum.hpp"

namespace crscore {

namespace {

// Uniform Dirichlet point via normalized exponential spacings.
std::vector<double> dirichlet(rng::SplitMix64& g, std::size_t n) {
  std::vector<double> e(n);
  StableSum total;
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = -std::log1p(-g.next_uniform());
    total.add(e[i]);
  }
  const double t = total.value();
  for (double& v : e) {
    v /= t;
  }
  return e;
}

CompetingRisksDistribution from_flat(const CompetingRisksDistribution& truth,
                                     std::vector<double> mass, double tail) {
  return CompetingRisksDistribution(truth.grid(), truth.num_causes(),
                                    std::move(mass), tail);
}

// Convex mixture of the truth with a random point of the simplex; w is
// kept away from 0 and 1 so the result is neither the truth nor pure
// noise.
CompetingRisksDistribution mix_candidate(
    const CompetingRisksDistribution& truth, rng::SplitMix64& g) {
  const double w = 0.25 + 0.5 * g.next_uniform();
  const std::vector<double>& base = truth.flat_mass();
  const std::vector<double> dir = dirichlet(g, base.size() + 1);

  std::vector<double> mass(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    mass[i] = (1.0 - w) * base[i] + w * dir[i];
  }
  const double tail = (1.0 - w) * truth.tail() + w * dir.back();
  return from_flat(truth, std::move(mass), tail);
}

// Rotates cause labels by r places; mass totals per time are preserved.
CompetingRisksDistribution cause_rotation(
    const CompetingRisksDistribution& truth, int r) {
  const int t_max = truth.grid().t_max();
  const int causes = truth.num_causes();
  std::vector<double> mass(truth.flat_mass().size());
  for (int j = 1; j <= causes; ++j) {
    const int src = (j - 1 + r) % causes + 1;
    for (int t = 1; t <= t_max; ++t) {
      mass[static_cast<std::size_t>(j - 1) * t_max + (t - 1)] =
          truth.mass(src, t);
    }
  }
  return from_flat(truth, std::move(mass), truth.tail());
}

// Cyclically shifts each cause's mass in time by s steps.
CompetingRisksDistribution time_shift(const CompetingRisksDistribution& truth,
                                      int s) {
  const int t_max = truth.grid().t_max();
  const int causes = truth.num_causes();
  std::vector<double> mass(truth.flat_mass().size());
  for (int j = 1; j <= causes; ++j) {
    for (int t = 1; t <= t_max; ++t) {
      const int src = (t - 1 + s) % t_max + 1;
      mass[static_cast<std::size_t>(j - 1) * t_max + (t - 1)] =
          truth.mass(j, src);
    }
  }
  return from_flat(truth, std::move(mass), truth.tail());
}

// Moves a fraction of the beyond-horizon mass onto the grid (spread
// proportionally, or uniformly when the grid is empty), or the reverse.
// Falls back to the other direction when the donor side carries no mass.
CompetingRisksDistribution tail_transfer(
    const CompetingRisksDistribution& truth, rng::SplitMix64& g) {
  const double frac = 0.25 + 0.5 * g.next_uniform();
  bool from_tail = g.next_uniform() < 0.5;

  std::vector<double> mass = truth.flat_mass();
  const double grid_mass = 1.0 - truth.tail();
  if (from_tail && truth.tail() == 0.0) {
    from_tail = false;
  }
  if (!from_tail && grid_mass <= 0.0) {
    from_tail = true;
  }

  double tail = truth.tail();
  if (from_tail) {
    const double moved = frac * tail;
    tail -= moved;
    if (grid_mass > 0.0) {
      const double scale = 1.0 + moved / grid_mass;
      for (double& v : mass) {
        v *= scale;
      }
    } else {
      const double share = moved / static_cast<double>(mass.size());
      for (double& v : mass) {
        v += share;
      }
    }
  } else {
    const double moved = frac * grid_mass;
    const double scale = 1.0 - frac;
    for (double& v : mass) {
      v *= scale;
    }
    tail += moved;
  }
  return from_flat(truth, std::move(mass), tail);
}

}  // namespace

std::vector<CompetingRisksDistribution> make_candidates(
    const CompetingRisksDistribution& truth, int count, std::uint64_t seed) {
  std::vector<CompetingRisksDistribution> out;
  if (count <= 0) {
    return out;
  }
  out.reserve(static_cast<std::size_t>(count));

  const int t_max = truth.grid().t_max();
  const int causes = truth.num_causes();
  for (int k = 0; k < count; ++k) {
    rng::SplitMix64 g(rng::stream_u64(seed, static_cast<std::uint64_t>(k)));
    int family = k % 4;
    // Degenerate shapes make the permutation families identities; swap
    // them for families that still move mass.
    if (family == 1 && causes < 2) {
      family = 2;
    }
    if (family == 2 && t_max < 2) {
      family = 3;
    }
    switch (family) {
      case 1: {
        const int r =
            1 + static_cast<int>(g.next_uniform() * (causes - 1));
        out.push_back(cause_rotation(truth, r < causes ? r : causes - 1));
        break;
      }
      case 2: {
        const int s =
            1 + static_cast<int>(g.next_uniform() * (t_max - 1));
        out.push_back(time_shift(truth, s < t_max ? s : t_max - 1));
        break;
      }
      case 3:
        out.push_back(tail_transfer(truth, g));
        break;
      default:
        out.push_back(mix_candidate(truth, g));
        break;
    }
  }
  return out;
}

}  // namespace crscore
