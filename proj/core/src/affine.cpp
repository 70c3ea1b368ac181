#include "crystden/affine.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace crystden {

std::string AffineElement::key() const {
  std::string out = lin.key();
  out += '|';
  for (const Rat& x : trans) {
    out += format_rational(x);
    out += ',';
  }
  return out;
}

AffineElement affine_identity(int dim) {
  return AffineElement{RatVector(dim), IntMatrix::identity(dim)};
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.dim() != b.dim() ||
      a.trans.size() != b.trans.size()) {
    throw DimensionMismatch("affine composition dimension mismatch");
  }
  RatVector t = mat_vec(a.lin, b.trans);
  for (size_t i = 0; i < t.size(); ++i) t[i] += a.trans[i];
  return AffineElement{std::move(t), mat_mul(a.lin, b.lin)};
}

namespace {

/// Integer inverse of a unimodular matrix, by rational elimination.
IntMatrix int_inverse(const IntMatrix& m) {
  const Int det = mat_det(m);
  if (det != 1 && det != -1) {
    throw NotUnimodular("linear part is not invertible over the integers");
  }
  const int n = m.n;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = Rat(m.at(i, j));
    aug.at(i, n + i) = 1;
  }
  // Gauss-Jordan; the left block is invertible so pivots always exist.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (aug.at(r, col) != 0) { piv = r; break; }
    }
    for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
    const Rat inv = Rat(1) / aug.at(col, col);
    for (int j = 0; j < 2 * n; ++j) aug.at(col, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug.at(r, col) == 0) continue;
      const Rat f = aug.at(r, col);
      for (int j = 0; j < 2 * n; ++j) aug.at(r, j) -= f * aug.at(col, j);
    }
  }
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat& e = aug.at(i, n + j);
      out.at(i, j) = boost::multiprecision::numerator(e);
    }
  }
  return out;
}

}  // namespace

AffineElement inverse(const AffineElement& a) {
  IntMatrix inv = int_inverse(a.lin);
  RatVector t = mat_vec(inv, a.trans);
  for (Rat& x : t) x = -x;
  return AffineElement{std::move(t), std::move(inv)};
}

TorsionResult is_torsion(const AffineElement& a, long long cap) {
  const long long k = mat_order(a.lin, cap);
  IntMatrix sum = IntMatrix::identity(a.dim());
  IntMatrix power = a.lin;
  for (long long i = 1; i < k; ++i) {
    for (size_t e = 0; e < sum.a.size(); ++e) sum.a[e] += power.a[e];
    if (i + 1 < k) power = mat_mul(power, a.lin);
  }
  if (!is_zero(mat_vec(sum, a.trans))) return TorsionResult{false, 0};
  return TorsionResult{true, k};
}

namespace {

/// Hermite-style echelon basis of the Z-span of integer columns; supports
/// an exact membership test.
class IntLattice {
 public:
  explicit IntLattice(int dim) : dim_(dim) {}

  void insert(std::vector<Int> v) { pending_.push_back(std::move(v)); }

  void reduce() {
    pivots_.clear();
    std::vector<std::vector<Int>> pool = std::move(pending_);
    pending_.clear();
    for (int row = 0; row < dim_; ++row) {
      // Euclid over the pool entries at this row until one survives.
      while (true) {
        int nz = -1, nz2 = -1;
        for (size_t c = 0; c < pool.size(); ++c) {
          if (pool[c][row] != 0) {
            if (nz < 0) nz = static_cast<int>(c);
            else { nz2 = static_cast<int>(c); break; }
          }
        }
        if (nz2 < 0) {
          if (nz >= 0) {
            pivots_.push_back({row, std::move(pool[nz])});
            pool.erase(pool.begin() + nz);
          }
          break;
        }
        if (abs(pool[nz][row]) < abs(pool[nz2][row])) std::swap(nz, nz2);
        const Int q = pool[nz][row] / pool[nz2][row];
        for (int i = 0; i < dim_; ++i) pool[nz][i] -= q * pool[nz2][i];
      }
    }
  }

  bool contains(std::vector<Int> v) const {
    for (const auto& [row, col] : pivots_) {
      if (v[row] == 0) continue;
      if (v[row] % col[row] != 0) return false;
      const Int q = v[row] / col[row];
      for (int i = 0; i < dim_; ++i) v[i] -= q * col[i];
    }
    for (const Int& x : v) {
      if (x != 0) return false;
    }
    return true;
  }

 private:
  int dim_;
  std::vector<std::vector<Int>> pending_;
  std::vector<std::pair<int, std::vector<Int>>> pivots_;  // by pivot row
};

bool is_pure_integer_translation(const AffineElement& g) {
  if (!g.lin.is_identity()) return false;
  for (const Rat& x : g.trans) {
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  return true;
}

std::vector<Int> to_int_vector(const RatVector& v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    if (boost::multiprecision::denominator(x) != 1) {
      throw ConstructionInvariantFailed("expected an integral translation");
    }
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

/// Pure translations certainly contained in the group: translations among
/// the generators, point-order powers of each generator and of each pair
/// product, and their orbit under the point group.
void verify_lattice_presence(int dim, const std::vector<AffineElement>& gens,
                             const PointGroup& pg) {
  std::vector<RatVector> found;
  auto add_power = [&](const AffineElement& g) {
    const long long k = mat_order(g.lin);
    AffineElement p = g;
    for (long long i = 1; i < k; ++i) p = compose(p, g);
    found.push_back(p.trans);
  };
  std::vector<bool> have(dim, false);
  for (const AffineElement& g : gens) {
    if (is_pure_integer_translation(g)) {
      found.push_back(g.trans);
      int nz = -1;
      bool unit = true;
      for (int i = 0; i < dim; ++i) {
        if (g.trans[i] == 0) continue;
        if (nz >= 0 || g.trans[i] != 1) { unit = false; break; }
        nz = i;
      }
      if (unit && nz >= 0) have[nz] = true;
    } else {
      add_power(g);
    }
  }
  // Fast path: the standard basis appears literally among the generators.
  if (std::all_of(have.begin(), have.end(), [](bool b) { return b; })) return;
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      add_power(compose(gens[i], gens[j]));
    }
  }
  IntLattice lattice(dim);
  for (const RatVector& t : found) {
    bool integral = true;
    for (const Rat& x : t) {
      if (boost::multiprecision::denominator(x) != 1) { integral = false; break; }
    }
    if (!integral) continue;  // dropping candidates only tightens the test
    for (const IntMatrix& a : pg.elements) {
      lattice.insert(to_int_vector(mat_vec(a, t)));
    }
  }
  lattice.reduce();
  for (int i = 0; i < dim; ++i) {
    std::vector<Int> e(dim);
    e[i] = 1;
    if (!lattice.contains(std::move(e))) {
      throw ConstructionInvariantFailed(
          "standard lattice translations are not generated");
    }
  }
}

}  // namespace

CrystGroup make_cryst_group(int dim, std::vector<AffineElement> gens,
                            long long closure_cap) {
  std::vector<IntMatrix> linear;
  for (const AffineElement& g : gens) {
    if (g.dim() != dim || static_cast<int>(g.trans.size()) != dim) {
      throw DimensionMismatch("generator dimension mismatch");
    }
    if (!g.lin.is_identity()) linear.push_back(g.lin);
  }
  PointGroup pg = closure(dim, linear, closure_cap);
  verify_lattice_presence(dim, gens, pg);
  return CrystGroup{dim, std::move(gens), std::move(pg)};
}

CrystGroup zn_group(int n) {
  std::vector<AffineElement> gens;
  for (int i = 0; i < n; ++i) {
    RatVector t(n);
    t[i] = 1;
    gens.push_back(AffineElement{std::move(t), IntMatrix::identity(n)});
  }
  return make_cryst_group(n, std::move(gens));
}

}  // namespace crystden
