#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crystden/rational.hpp"

namespace crystden {

/// Square integer matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), a(static_cast<size_t>(size) * size) {}
  IntMatrix(int size, std::vector<Int> entries);

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static IntMatrix identity(int size);
  bool is_identity() const;

  /// Canonical text key: dimension plus comma-joined entries.
  std::string key() const;

  bool operator==(const IntMatrix& other) const = default;
};

/// Compact row-list rendering, e.g. [[1,0],[0,-1]].
std::string matrix_text(const IntMatrix& m);

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_sub_identity(const IntMatrix& x);  // x - I
IntMatrix mat_pow(const IntMatrix& x, long long e);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Small matrices with small entries take an overflow-checked int64 path.
Int mat_det(const IntMatrix& m);

/// det(A - I) == 0, i.e. A fixes a nonzero vector.
bool has_eigenvalue_one(const IntMatrix& m);

/// Default cap for multiplicative order searches: 10 * n! * 2^n.
long long default_order_cap(int n);

/// Smallest k >= 1 with A^k = I; throws OrderExceedsCap past the cap.
long long mat_order(const IntMatrix& m, long long cap);
long long mat_order(const IntMatrix& m);

/// Rectangular rational matrix, row-major.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  RatMatrix(int r, int c, std::vector<Rat> entries);

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static RatMatrix identity(int size);

  bool operator==(const RatMatrix& other) const = default;
};

using RatVector = std::vector<Rat>;

RatMatrix rat_from(const IntMatrix& m);
RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y);
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
RatVector mat_vec(const IntMatrix& m, const RatVector& v);
bool is_zero(const RatVector& v);

/// Row reduce a copy; returns the rank.
int rat_rank(const RatMatrix& m);

/// Reduced basis of the row space, in echelon order.
std::vector<RatVector> rat_row_space(const std::vector<RatVector>& rows);

/// Basis of the right kernel {v : Mv = 0}, echelon order, deterministic.
std::vector<RatVector> rational_kernel(const RatMatrix& m);

/// For A integral of finite order and W an A-invariant rational subspace
/// (spanned by basis_w): decide whether every coset vector fixed modulo W
/// lifts to ker(A - I) + W. Compares dim{v : (A-I)v in W} against
/// dim(ker(A-I) + W); the containment one way always holds.
bool quotient_fix_projection_check(const IntMatrix& a,
                                   const std::vector<RatVector>& basis_w,
                                   long long order_cap);

}  // namespace crystden
