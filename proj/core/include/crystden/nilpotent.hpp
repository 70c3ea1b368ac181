#pragma once

#include <string>
#include <vector>

#include "crystden/ball_stats.hpp"
#include "crystden/matrix.hpp"

namespace crystden {

/// One structure constant [X_i, X_j] += c X_l, indices 1-based as in the
/// algebra file format.
struct BracketEntry {
  int i = 0;
  int j = 0;
  int l = 0;
  Rat c;
};

struct LowerCentral {
  std::vector<int> ranks;  // rank of g^i / g^{i+1}, i = 1..step
  int degree = 0;          // sum of i * ranks[i-1]
};

/// Nilpotent Lie algebra over Q in a triangular ordered basis: brackets
/// only raise the basis index. Construction checks triangularity, the
/// Jacobi identity (dim <= 8), and that the stated step matches the lower
/// central series; weights are derived from the series.
class NilAlgebra {
 public:
  NilAlgebra(int dim, int step, std::vector<std::string> basis_names,
             std::vector<BracketEntry> entries);

  int dim() const { return dim_; }
  int step() const { return step_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<BracketEntry>& entries() const { return entries_; }
  bool is_abelian() const { return entries_.empty(); }

  /// [u, v] on coordinate vectors.
  RatVector bracket(const RatVector& u, const RatVector& v) const;

  bool operator==(const NilAlgebra& other) const;

 private:
  int dim_ = 0;
  int step_ = 0;
  std::vector<std::string> names_;
  std::vector<BracketEntry> entries_;  // canonical: i < j, sorted
  std::vector<int> weights_;
};

LowerCentral lower_central_series(const NilAlgebra& a);

/// Group element exp(X) in exponential (first-kind) coordinates.
struct NilElement {
  const NilAlgebra* algebra = nullptr;
  RatVector coords;

  bool operator==(const NilElement& other) const;
};

NilElement nil_element(const NilAlgebra& a, RatVector coords);
NilElement nil_identity(const NilAlgebra& a);
NilElement nil_inverse(const NilElement& x);

/// Exact truncated BCH product, valid through step 4:
/// x + y + 1/2 [x,y] + 1/12 [x,[x,y]] - 1/12 [y,[x,y]] - 1/24 [y,[x,[x,y]]].
/// Throws StepTooHigh for algebras of step 5 or more.
NilElement bch_multiply(const NilElement& x, const NilElement& y);

/// Coordinates of the second kind: x = exp(s_n X_n) ... exp(s_1 X_1),
/// solved by peeling factors off the right with bch_multiply.
RatVector to_second_kind(const NilElement& x);
NilElement from_second_kind(const NilAlgebra& a, const RatVector& s);

/// Member of the discrete cocompact lattice: second-kind coordinates all
/// integral. For the algebras shipped here this set is a subgroup.
bool lattice_membership(const NilElement& x);

/// Generalized Heisenberg algebra: basis X_1..X_n, Y_1..Y_n, Z with
/// [X_i, Y_i] = Z; dim 2n+1, step 2.
NilAlgebra heisenberg(int n);

struct NilAutomorphism {
  RatMatrix matrix;
};

/// Validates that the matrix is invertible and preserves the bracket on
/// all basis pairs; throws NotInvariant otherwise.
NilAutomorphism make_automorphism(const NilAlgebra& a, RatMatrix m);

/// The order-4 automorphism of heisenberg(2) with eigenvalues +-i, -1:
/// X1 -> X2, X2 -> -X1, Y1 -> -Y2, Y2 -> Y1, Z -> -Z. Construction
/// re-verifies order 4 and det(T - I) != 0.
NilAutomorphism h2_automorphism(const NilAlgebra& h2);

NilElement apply(const NilAutomorphism& t, const NilElement& x);

/// Smallest e >= 1 with T^e = I; throws NotFiniteOrder past the cap.
long long automorphism_order(const NilAutomorphism& t,
                             long long cap = kDefaultTorsionOrderCap);

/// Torsion test for (g, T^j) in the semidirect product: with m the order
/// of A = T^j, the element is torsion iff g A(g) A^2(g) ... A^{m-1}(g)
/// is the identity.
bool nil_semidirect_torsion(const NilElement& g, const NilAutomorphism& t,
                            long long j,
                            long long cap = kDefaultTorsionOrderCap);

/// Word-metric ball census over the lattice generated by exp of every
/// basis vector, together with the automorphism generator when given.
/// Elements are pairs (lattice element, automorphism power); canonical
/// keys use second-kind coordinates. Census semantics as in ball_bfs.
std::vector<BallStats> nil_ball_census(const NilAlgebra& a,
                                       const NilAutomorphism* t,
                                       const std::vector<int>& radii,
                                       const CensusCaps& caps = {});

BallStats nil_ball_bfs(const NilAlgebra& a, const NilAutomorphism* t, int r,
                       const CensusCaps& caps = {});

/// max_i |s_i|^(1 / weight_i) on second-kind coordinates; an estimate.
double box_norm(const NilElement& x);

struct BallBoxReport {
  double constant_a = 1.0;   // ratios box_norm / word_length lie in [1/a, a]
  double growth_slope = 0.0; // log-log fit of |B(r)|
};

/// Fit the two-sided comparability constant between the box norm and the
/// word metric over balls at the given radii (at least 3), and the growth
/// slope alongside.
BallBoxReport ball_box_comparability(const NilAlgebra& a,
                                     const std::vector<int>& radii,
                                     const CensusCaps& caps = {});

/// For a nonabelian algebra of dim 3 or 4: every supplied finite-order
/// automorphism must have eigenvalue 1. Returns true when all do.
bool low_dim_nonabelian_check(const NilAlgebra& a,
                              const std::vector<NilAutomorphism>& autos,
                              long long cap = kDefaultTorsionOrderCap);

/// Exact eigenvalue-1 census over the cyclic group generated by T.
struct NilDensityValue {
  long long group_order = 0;
  long long m = 0;
  Rat density;
};
NilDensityValue nil_density_value(const NilAutomorphism& t,
                                  long long cap = kDefaultTorsionOrderCap);

}  // namespace crystden
