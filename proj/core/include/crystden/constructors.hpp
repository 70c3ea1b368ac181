#pragma once

#include <string>
#include <vector>

#include "crystden/affine.hpp"

namespace crystden {

/// The group Z^phi(m) ⋊ <T> with T the companion matrix of the m-th
/// cyclotomic polynomial. Point-group density is (m-1)/m: none of
/// T, ..., T^{m-1} has eigenvalue 1, which is verified at construction
/// along with mat_order(T) == m.
CrystGroup gamma_m(long long m);

/// Block-diagonal product; the point group is assembled pairwise from the
/// factors, never re-closed, so density multiplies exactly.
CrystGroup direct_product(const CrystGroup& g1, const CrystGroup& g2);

/// Crystallographic group whose point-group density is exactly p/q,
/// realized as gamma_{p+1} x ... x gamma_q; p = 0 yields Z^1. Requires
/// 0 <= p < q (throws InvalidRational).
CrystGroup rational_density_group(long long p, long long q);

struct CatalogEntry {
  std::string name;
  CrystGroup group;
  Rat expected_density;
};

/// All 17 wallpaper groups in standard primitive settings. Expected
/// densities are recomputed from the point groups at load; a mismatch
/// throws CatalogValidationFailed naming the entry.
std::vector<CatalogEntry> load_catalog();

/// Catalog entry by name; throws CatalogValidationFailed for an unknown
/// name, listing the valid ones.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace crystden
