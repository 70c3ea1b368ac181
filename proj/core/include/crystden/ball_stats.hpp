#pragma once

#include <string>
#include <vector>

#include "crystden/affine.hpp"
#include "crystden/matrix.hpp"

namespace crystden {

/// Resource limits for ball censuses. Thread count > 1 parallelizes the
/// per-element classification; results are identical for any value.
struct CensusCaps {
  long long max_ball_elements = 5'000'000;
  long long torsion_order_cap = kDefaultTorsionOrderCap;
  int threads = 1;
};

/// Per-coset slice of a ball census, keyed by the canonical key of the
/// coset's point-group part.
struct CosetStat {
  std::string key;
  std::string label;
  long long count = 0;
  long long torsion = 0;
};

/// Census of a word-metric ball B(r): totals, torsion counts, and the
/// per-coset tallies. Sum of coset counts equals total.
struct BallStats {
  int radius = 0;
  long long total = 0;
  long long torsion = 0;
  int generating_set_size = 0;   // after symmetrization
  long long point_group_order = 0;
  std::vector<CosetStat> per_coset;  // sorted by key

  const CosetStat* find_coset(const std::string& coset_key) const;
};

/// torsion / total as an exact rational.
Rat empirical_density(const BallStats& stats);

/// Worst deviation |coset_count/total - 1/|F|| over all point-group
/// elements; cosets empty at this radius deviate by the full 1/|F|.
Rat coset_equidistribution(const BallStats& stats);

/// Least-squares slope of log(total) against log(radius). Requires at
/// least 3 strictly increasing radii, each >= 4; the result is an
/// estimate, the only floating-point quantity derived from a census.
double growth_degree_fit(const std::vector<BallStats>& series);

/// Least-squares slope of log(coset torsion count) against log(radius)
/// for the coset keyed by a point-group element. Throws EmptyCoset if the
/// coset is missing or torsion-free at any radius.
double torsion_coset_exponent(const std::vector<BallStats>& series,
                              const IntMatrix& coset);

}  // namespace crystden
