#pragma once

#include <vector>

#include "crystden/affine.hpp"
#include "crystden/ball_stats.hpp"

namespace crystden {

/// Exact census of the word-metric ball of radius r for the symmetrized
/// generating set S. Breadth-first with exact canonical-key
/// deduplication; throws BallTooLarge past the element cap.
BallStats ball_bfs(const CrystGroup& g, const std::vector<AffineElement>& s,
                   int r, const CensusCaps& caps = {});

/// One BFS pass snapshotting every requested radius (strictly
/// increasing). Far cheaper than independent runs per radius.
std::vector<BallStats> ball_census(const CrystGroup& g,
                                   const std::vector<AffineElement>& s,
                                   const std::vector<int>& radii,
                                   const CensusCaps& caps = {});

/// Census with the group's own generators.
std::vector<BallStats> ball_census(const CrystGroup& g,
                                   const std::vector<int>& radii,
                                   const CensusCaps& caps = {});

/// Exhaustively verify that every element of the A-coset with translation
/// part inside the centered box of the given radius is torsion. Requires
/// det(A - I) != 0 (throws EigenvalueOnePresent otherwise); the coset is
/// materialized by a BFS wide enough to cover the box.
bool full_coset_check(const CrystGroup& g, const IntMatrix& a, int box_radius,
                      const CensusCaps& caps = {});

}  // namespace crystden
