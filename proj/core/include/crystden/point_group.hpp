#pragma once

#include <vector>

#include "crystden/matrix.hpp"

namespace crystden {

/// Finite group of integer matrices. The element list is the full group,
/// deduplicated and sorted by entry tuple, so equal groups list equal.
struct PointGroup {
  int dim = 0;
  std::vector<IntMatrix> generators;
  std::vector<IntMatrix> elements;

  long long order() const { return static_cast<long long>(elements.size()); }
};

inline constexpr long long kDefaultClosureCap = 1024;

/// Close the generators under multiplication. Every generator must have
/// finite order; throws GroupTooLarge past the cap.
PointGroup closure(const std::vector<IntMatrix>& generators,
                   long long cap = kDefaultClosureCap);

/// As above with an explicit dimension, allowing an empty generator list
/// (the trivial group).
PointGroup closure(int dim, const std::vector<IntMatrix>& generators,
                   long long cap = kDefaultClosureCap);

/// Group assembled from an explicit element list; used by product
/// constructions where the elements are already known. Sorts and checks
/// nothing beyond deduplication.
PointGroup group_from_elements(int dim, std::vector<IntMatrix> elements,
                               std::vector<IntMatrix> generators);

struct ElementCensusRow {
  IntMatrix element;
  bool has_eigenvalue_one = false;
  long long order = 0;
};

/// Census result: m counts the elements without eigenvalue 1, and
/// density = m / group_order in lowest terms.
struct DensityReport {
  long long group_order = 0;
  long long m = 0;
  Rat density;
  std::vector<ElementCensusRow> per_element;
};

DensityReport density_exact(const PointGroup& g);

/// The census without the per-element table.
struct DensityValue {
  long long group_order = 0;
  long long m = 0;
  Rat density;
};
DensityValue density_value(const PointGroup& g);

/// For odd ambient dimension: checks density <= 1/2 and the mechanism
/// behind it, that every element of determinant +1 has eigenvalue 1.
/// Throws DimensionNotOdd on even input.
bool odd_dim_bound_check(const PointGroup& g);

}  // namespace crystden
