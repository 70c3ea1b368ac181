#pragma once

#include <string>
#include <vector>

#include "crystden/matrix.hpp"
#include "crystden/point_group.hpp"

namespace crystden {

/// Affine map t -> lin * t + trans with integer linear part and rational
/// translation, in lattice coordinates.
struct AffineElement {
  RatVector trans;
  IntMatrix lin;

  int dim() const { return lin.n; }

  /// Canonical text key: linear entries, then reduced translation fractions.
  std::string key() const;

  bool operator==(const AffineElement& other) const = default;
};

AffineElement affine_identity(int dim);
AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);

struct TorsionResult {
  bool torsion = false;
  long long order = 0;  // the exact element order when torsion
};

inline constexpr long long kDefaultTorsionOrderCap = 720;

/// (v, A) has finite order iff (I + A + ... + A^{k-1}) v = 0 where
/// k = mat_order(A); the order is then exactly k. Throws OrderExceedsCap
/// when the linear part's order search passes the cap.
TorsionResult is_torsion(const AffineElement& a,
                         long long cap = kDefaultTorsionOrderCap);

/// Crystallographic group: generators plus the derived finite point group.
/// Construction verifies that the standard lattice translations (e_i, I)
/// are generated.
struct CrystGroup {
  int dim = 0;
  std::vector<AffineElement> gens;
  PointGroup point_group;
};

CrystGroup make_cryst_group(int dim, std::vector<AffineElement> gens,
                            long long closure_cap = kDefaultClosureCap);

/// The free abelian group Z^n with standard generators.
CrystGroup zn_group(int n);

}  // namespace crystden
