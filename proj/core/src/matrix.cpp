#include "crystden/matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace crystden {

IntMatrix::IntMatrix(int size, std::vector<Int> entries)
    : n(size), a(std::move(entries)) {
  if (n < 0 || a.size() != static_cast<size_t>(n) * n) {
    throw DimensionMismatch("matrix entry count does not match dimension");
  }
}

IntMatrix IntMatrix::identity(int size) {
  IntMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

std::string IntMatrix::key() const {
  std::string out = std::to_string(n) + ":";
  for (const Int& e : a) {
    append_int_text(out, e);
    out += ',';
  }
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.n; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < m.n; ++j) {
      if (j) out += ',';
      append_int_text(out, m.at(i, j));
    }
    out += ']';
  }
  out += ']';
  return out;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw DimensionMismatch("product of unequal dimensions");
  IntMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < x.n; ++j) {
        out.at(i, j) += xik * y.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix mat_sub_identity(const IntMatrix& x) {
  IntMatrix out = x;
  for (int i = 0; i < x.n; ++i) out.at(i, i) -= 1;
  return out;
}

IntMatrix mat_pow(const IntMatrix& x, long long e) {
  if (e < 0) throw DimensionMismatch("negative matrix power");
  IntMatrix result = IntMatrix::identity(x.n);
  IntMatrix base = x;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

/// Partition indices into connected components of the symmetric nonzero
/// pattern. A matrix is block-diagonal across components, so determinants
/// and orders factor through them.
std::vector<std::vector<int>> pattern_components(const IntMatrix& m) {
  const int n = m.n;
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    std::vector<int> members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (comp[j] >= 0) continue;
        if (m.at(i, j) != 0 || m.at(j, i) != 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& idx) {
  IntMatrix out(static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = 0; j < idx.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    }
  }
  return out;
}

/// Fraction-free elimination over int64; returns false on any overflow so
/// the caller can redo the block in big integers.
bool bareiss_int64(std::vector<long long> w, int n, long long& det_out) {
  long long prev = 1;
  int sign = 1;
  auto at = [&](int i, int j) -> long long& { return w[i * n + j]; };
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) { r = i; break; }
      }
      if (r < 0) { det_out = 0; return true; }
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        long long t1, t2, num;
        if (__builtin_mul_overflow(at(i, j), at(k, k), &t1)) return false;
        if (__builtin_mul_overflow(at(i, k), at(k, j), &t2)) return false;
        if (__builtin_sub_overflow(t1, t2, &num)) return false;
        at(i, j) = num / prev;  // exact by construction
      }
    }
    prev = at(k, k);
  }
  det_out = (n == 0) ? 1 : sign * at(n - 1, n - 1);
  return true;
}

Int bareiss_big(const IntMatrix& m) {
  const int n = m.n;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i) {
        if (w.at(i, k) != 0) { r = i; break; }
      }
      if (r < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
    }
    prev = w.at(k, k);
  }
  return (n == 0) ? Int(1) : Int(sign * w.at(n - 1, n - 1));
}

Int det_block(const IntMatrix& m) {
  constexpr long long kFit = std::numeric_limits<long long>::max() / 4;
  bool small = true;
  std::vector<long long> w;
  w.reserve(m.a.size());
  for (const Int& e : m.a) {
    if (e > kFit || e < -kFit) { small = false; break; }
    w.push_back(e.convert_to<long long>());
  }
  if (small) {
    long long d = 0;
    if (bareiss_int64(std::move(w), m.n, d)) return Int(d);
  }
  return bareiss_big(m);
}

long long lcm_capped(long long a, long long b, long long cap) {
  const long long g = std::gcd(a, b);
  const long long q = a / g;
  if (b > cap / q) return cap + 1;
  return q * b;
}

}  // namespace

Int mat_det(const IntMatrix& m) {
  if (m.n == 0) return 1;
  const auto comps = pattern_components(m);
  if (comps.size() == 1) return det_block(m);
  Int det = 1;
  for (const auto& idx : comps) {
    det *= det_block(submatrix(m, idx));
    if (det == 0) return 0;
  }
  return det;
}

bool has_eigenvalue_one(const IntMatrix& m) {
  // Innermost loop of every density census. Narrow A - I to int64 in one
  // pass, split on its zero pattern, and stop at the first singular
  // block; fall back to exact big-integer blocks only on overflow.
  const int n = m.n;
  if (n == 0) return false;
  constexpr long long kFit = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> w(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) {
    const Int& e = m.a[i];
    if (e > kFit || e < -kFit) return mat_det(mat_sub_identity(m)) == 0;
    w[i] = e.convert_to<long long>();
  }
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i) * n + i] -= 1;

  std::vector<int> comp(n, -1);
  std::vector<int> stack, idx;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    idx.clear();
    stack.assign(1, s);
    comp[s] = s;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      idx.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (comp[j] < 0 && (w[static_cast<size_t>(i) * n + j] != 0 ||
                            w[static_cast<size_t>(j) * n + i] != 0)) {
          comp[j] = s;
          stack.push_back(j);
        }
      }
    }
    const int k = static_cast<int>(idx.size());
    std::vector<long long> sub(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        sub[static_cast<size_t>(i) * k + j] =
            w[static_cast<size_t>(idx[i]) * n + idx[j]];
      }
    }
    long long d = 0;
    if (bareiss_int64(std::move(sub), k, d)) {
      if (d == 0) return true;
      continue;
    }
    IntMatrix big(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        big.at(i, j) = m.at(idx[i], idx[j]);
        if (idx[i] == idx[j]) big.at(i, j) -= 1;
      }
    }
    if (det_block(big) == 0) return true;
  }
  return false;
}

long long default_order_cap(int n) {
  long long cap = 10;
  for (int i = 2; i <= n; ++i) {
    if (cap > 1'000'000'000'000'000LL / i) return 1'000'000'000'000'000LL;
    cap *= i;
  }
  for (int i = 0; i < n; ++i) {
    if (cap > 1'000'000'000'000'000LL / 2) return 1'000'000'000'000'000LL;
    cap *= 2;
  }
  return cap;
}

long long mat_order(const IntMatrix& m, long long cap) {
  if (m.n == 0) return 1;
  if (cap <= 0) throw OrderExceedsCap("order cap must be positive");
  const auto comps = pattern_components(m);
  long long order = 1;
  for (const auto& idx : comps) {
    const IntMatrix block = submatrix(m, idx);
    IntMatrix p = block;
    long long k = 1;
    while (!p.is_identity()) {
      if (++k > cap) {
        throw OrderExceedsCap("matrix order exceeds cap " +
                              std::to_string(cap));
      }
      p = mat_mul(p, block);
    }
    order = lcm_capped(order, k, cap);
    if (order > cap) {
      throw OrderExceedsCap("matrix order exceeds cap " + std::to_string(cap));
    }
  }
  return order;
}

long long mat_order(const IntMatrix& m) {
  return mat_order(m, default_order_cap(m.n));
}

RatMatrix::RatMatrix(int r, int c, std::vector<Rat> entries)
    : rows(r), cols(c), a(std::move(entries)) {
  if (rows < 0 || cols < 0 ||
      a.size() != static_cast<size_t>(rows) * cols) {
    throw DimensionMismatch("matrix entry count does not match shape");
  }
}

RatMatrix RatMatrix::identity(int size) {
  RatMatrix m(size, size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix rat_from(const IntMatrix& m) {
  RatMatrix out(m.n, m.n);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = Rat(m.a[i]);
  return out;
}

RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) throw DimensionMismatch("product shape mismatch");
  RatMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        out.at(i, j) += xik * y.at(k, j);
      }
    }
  }
  return out;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (m.cols != static_cast<int>(v.size())) {
    throw DimensionMismatch("matrix-vector shape mismatch");
  }
  RatVector out(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Rat acc;
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j) != 0 && v[j] != 0) acc += m.at(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

RatVector mat_vec(const IntMatrix& m, const RatVector& v) {
  if (m.n != static_cast<int>(v.size())) {
    throw DimensionMismatch("matrix-vector shape mismatch");
  }
  RatVector out(m.n);
  for (int i = 0; i < m.n; ++i) {
    Rat acc;
    for (int j = 0; j < m.n; ++j) {
      if (m.at(i, j) != 0 && v[j] != 0) acc += Rat(m.at(i, j)) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

bool is_zero(const RatVector& v) {
  for (const Rat& x : v) {
    if (x != 0) return false;
  }
  return true;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns in order.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) { piv = r; break; }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    }
    const Rat inv = Rat(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col);
      for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Columns of the arguments assembled side by side into one matrix.
RatMatrix columns_matrix(int dim, const std::vector<RatVector>& cols) {
  RatMatrix out(dim, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<int>(cols[c].size()) != dim) {
      throw DimensionMismatch("column length mismatch");
    }
    for (int i = 0; i < dim; ++i) out.at(i, static_cast<int>(c)) = cols[c][i];
  }
  return out;
}

}  // namespace

int rat_rank(const RatMatrix& m) {
  RatMatrix w = m;
  return static_cast<int>(rref(w).size());
}

std::vector<RatVector> rat_row_space(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  const int cols = static_cast<int>(rows.front().size());
  RatMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw DimensionMismatch("row length mismatch");
    }
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  const size_t rank = rref(m).size();
  std::vector<RatVector> basis;
  basis.reserve(rank);
  for (size_t r = 0; r < rank; ++r) {
    RatVector v(cols);
    for (int c = 0; c < cols; ++c) v[c] = m.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> rational_kernel(const RatMatrix& m) {
  RatMatrix w = m;
  const std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -w.at(static_cast<int>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool quotient_fix_projection_check(const IntMatrix& a,
                                   const std::vector<RatVector>& basis_w,
                                   long long order_cap) {
  const int n = a.n;
  mat_order(a, order_cap);  // finite order required; throws otherwise

  const RatMatrix w = columns_matrix(n, basis_w);
  const int k = w.cols;
  const int rank_w = rat_rank(w);

  // Invariance of W: rank([W | A w_c]) must not exceed rank(W).
  for (int c = 0; c < k; ++c) {
    RatVector img(n);
    for (int i = 0; i < n; ++i) {
      Rat acc;
      for (int j = 0; j < n; ++j) {
        if (a.at(i, j) != 0) acc += Rat(a.at(i, j)) * w.at(j, c);
      }
      img[i] = std::move(acc);
    }
    RatMatrix aug(n, k + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) aug.at(i, j) = w.at(i, j);
      aug.at(i, k) = img[i];
    }
    if (rat_rank(aug) != rank_w) {
      throw NotInvariant("subspace is not invariant under the matrix");
    }
  }

  // dim U1, U1 = {v : (A - I)v in W}, via the kernel of [(A - I) | -W].
  RatMatrix sys(n, n + k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sys.at(i, j) = Rat(a.at(i, j)) - (i == j ? 1 : 0);
    }
    for (int c = 0; c < k; ++c) sys.at(i, n + c) = -w.at(i, c);
  }
  const int rank_sys = rat_rank(sys);
  const int dim_u1 = (n + k - rank_sys) - (k - rank_w);

  // dim U2, U2 = ker(A - I) + W.
  RatMatrix amini(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      amini.at(i, j) = Rat(a.at(i, j)) - (i == j ? 1 : 0);
    }
  }
  std::vector<RatVector> fix = rational_kernel(amini);
  RatMatrix u2(n, static_cast<int>(fix.size()) + k);
  for (int i = 0; i < n; ++i) {
    for (size_t c = 0; c < fix.size(); ++c) {
      u2.at(i, static_cast<int>(c)) = fix[c][i];
    }
    for (int c = 0; c < k; ++c) {
      u2.at(i, static_cast<int>(fix.size()) + c) = w.at(i, c);
    }
  }
  const int dim_u2 = rat_rank(u2);

  return dim_u1 == dim_u2;
}

}  // namespace crystden
