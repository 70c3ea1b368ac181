#include "crystden/nilpotent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "internal_parallel.hpp"

namespace crystden {

namespace {

bool same_algebra(const NilAlgebra* a, const NilAlgebra* b) {
  if (a == nullptr || b == nullptr) return false;
  return a == b || *a == *b;
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  const int cols = static_cast<int>(v.size());
  RatMatrix with(static_cast<int>(basis.size()) + 1, cols);
  for (size_t r = 0; r < basis.size(); ++r) {
    for (int c = 0; c < cols; ++c) with.at(static_cast<int>(r), c) = basis[r][c];
  }
  for (int c = 0; c < cols; ++c) {
    with.at(static_cast<int>(basis.size()), c) = v[c];
  }
  return rat_rank(with) == static_cast<int>(basis.size());
}

std::vector<std::vector<RatVector>> central_series_spans(
    const NilAlgebra& a) {
  const int n = a.dim();
  std::vector<RatVector> current;
  for (int i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    current.push_back(std::move(e));
  }
  std::vector<std::vector<RatVector>> spans{current};
  for (int iter = 0; iter < n + 1 && !spans.back().empty(); ++iter) {
    std::vector<RatVector> brackets;
    for (int i = 0; i < n; ++i) {
      RatVector e(n);
      e[i] = 1;
      for (const RatVector& w : spans.back()) {
        RatVector b = a.bracket(e, w);
        if (!is_zero(b)) brackets.push_back(std::move(b));
      }
    }
    spans.push_back(rat_row_space(brackets));
  }
  if (!spans.back().empty()) {
    throw NotNilpotent("lower central series does not terminate");
  }
  return spans;
}

}  // namespace

NilAlgebra::NilAlgebra(int dim, int step, std::vector<std::string> basis_names,
                       std::vector<BracketEntry> entries)
    : dim_(dim), step_(step), names_(std::move(basis_names)) {
  if (dim_ < 1) throw DimensionOutOfRange("algebra dimension must be >= 1");
  if (names_.size() != static_cast<size_t>(dim_)) {
    throw DimensionMismatch("basis name count does not match dimension");
  }
  std::map<std::tuple<int, int, int>, Rat> folded;
  for (BracketEntry e : entries) {
    if (e.i < 1 || e.i > dim_ || e.j < 1 || e.j > dim_ || e.l < 1 ||
        e.l > dim_) {
      throw DimensionOutOfRange("bracket index out of range");
    }
    if (e.i == e.j) {
      throw ConstructionInvariantFailed("bracket [X_i, X_i] must vanish");
    }
    if (e.i > e.j) {
      std::swap(e.i, e.j);
      e.c = -e.c;
    }
    if (e.l <= e.j) {
      throw ConstructionInvariantFailed(
          "basis is not triangular: bracket target must exceed both inputs");
    }
    folded[{e.i, e.j, e.l}] += e.c;
  }
  for (const auto& [key, c] : folded) {
    if (c == 0) continue;
    entries_.push_back(
        BracketEntry{std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }

  if (dim_ <= 8) {
    for (int i = 1; i <= dim_; ++i) {
      for (int j = i + 1; j <= dim_; ++j) {
        for (int k = j + 1; k <= dim_; ++k) {
          RatVector ei(dim_), ej(dim_), ek(dim_);
          ei[i - 1] = 1;
          ej[j - 1] = 1;
          ek[k - 1] = 1;
          RatVector sum = bracket(bracket(ei, ej), ek);
          const RatVector t2 = bracket(bracket(ej, ek), ei);
          const RatVector t3 = bracket(bracket(ek, ei), ej);
          for (int c = 0; c < dim_; ++c) sum[c] += t2[c] + t3[c];
          if (!is_zero(sum)) {
            throw ConstructionInvariantFailed(
                "structure constants violate the Jacobi identity");
          }
        }
      }
    }
  }

  const auto spans = central_series_spans(*this);
  int computed_step = 0;
  for (size_t i = 0; i < spans.size(); ++i) {
    if (!spans[i].empty()) computed_step = static_cast<int>(i) + 1;
  }
  if (computed_step != step_) {
    throw ConstructionInvariantFailed(
        "stated step " + std::to_string(step_) +
        " does not match the lower central series (" +
        std::to_string(computed_step) + ")");
  }
  weights_.assign(dim_, 1);
  for (int j = 0; j < dim_; ++j) {
    RatVector e(dim_);
    e[j] = 1;
    for (size_t i = 1; i < spans.size(); ++i) {
      if (in_span(spans[i], e)) weights_[j] = static_cast<int>(i) + 1;
    }
  }
}

RatVector NilAlgebra::bracket(const RatVector& u, const RatVector& v) const {
  if (u.size() != static_cast<size_t>(dim_) ||
      v.size() != static_cast<size_t>(dim_)) {
    throw DimensionMismatch("bracket operand dimension mismatch");
  }
  RatVector out(dim_);
  for (const BracketEntry& e : entries_) {
    const Rat cross =
        u[e.i - 1] * v[e.j - 1] - u[e.j - 1] * v[e.i - 1];
    if (cross != 0) out[e.l - 1] += e.c * cross;
  }
  return out;
}

bool NilAlgebra::operator==(const NilAlgebra& other) const {
  if (dim_ != other.dim_ || step_ != other.step_ ||
      entries_.size() != other.entries_.size()) {
    return false;
  }
  for (size_t k = 0; k < entries_.size(); ++k) {
    const BracketEntry& x = entries_[k];
    const BracketEntry& y = other.entries_[k];
    if (x.i != y.i || x.j != y.j || x.l != y.l || x.c != y.c) return false;
  }
  return true;
}

LowerCentral lower_central_series(const NilAlgebra& a) {
  const auto spans = central_series_spans(a);
  LowerCentral out;
  for (size_t i = 0; i + 1 < spans.size(); ++i) {
    const int drop = static_cast<int>(spans[i].size()) -
                     static_cast<int>(spans[i + 1].size());
    if (spans[i].empty()) break;
    out.ranks.push_back(drop);
    out.degree += static_cast<int>(i + 1) * drop;
  }
  while (!out.ranks.empty() && out.ranks.back() == 0) out.ranks.pop_back();
  return out;
}

bool NilElement::operator==(const NilElement& other) const {
  return same_algebra(algebra, other.algebra) && coords == other.coords;
}

NilElement nil_element(const NilAlgebra& a, RatVector coords) {
  if (coords.size() != static_cast<size_t>(a.dim())) {
    throw DimensionMismatch("element coordinate count mismatch");
  }
  return NilElement{&a, std::move(coords)};
}

NilElement nil_identity(const NilAlgebra& a) {
  return NilElement{&a, RatVector(a.dim())};
}

NilElement nil_inverse(const NilElement& x) {
  NilElement out = x;
  for (Rat& c : out.coords) c = -c;
  return out;
}

namespace {

RatVector bch_raw(const NilAlgebra& a, const RatVector& x,
                  const RatVector& y) {
  RatVector z(a.dim());
  for (int i = 0; i < a.dim(); ++i) z[i] = x[i] + y[i];
  if (a.step() < 2) return z;
  const RatVector b = a.bracket(x, y);
  if (is_zero(b)) return z;
  const Rat half(1, 2);
  for (int i = 0; i < a.dim(); ++i) z[i] += half * b[i];
  if (a.step() < 3) return z;
  const RatVector xb = a.bracket(x, b);
  const RatVector yb = a.bracket(y, b);
  const Rat twelfth(1, 12);
  for (int i = 0; i < a.dim(); ++i) {
    z[i] += twelfth * (xb[i] - yb[i]);
  }
  if (a.step() < 4) return z;
  const RatVector yxb = a.bracket(y, xb);
  const Rat tf(-1, 24);
  for (int i = 0; i < a.dim(); ++i) z[i] += tf * yxb[i];
  return z;
}

}  // namespace

NilElement bch_multiply(const NilElement& x, const NilElement& y) {
  if (!same_algebra(x.algebra, y.algebra)) {
    throw DimensionMismatch("elements live on different algebras");
  }
  if (x.algebra->step() > 4) {
    throw StepTooHigh("truncated series only covers step <= 4");
  }
  return NilElement{x.algebra, bch_raw(*x.algebra, x.coords, y.coords)};
}

RatVector to_second_kind(const NilElement& x) {
  const NilAlgebra& a = *x.algebra;
  if (a.step() > 4) throw StepTooHigh("truncated series only covers step <= 4");
  RatVector w = x.coords;
  RatVector s(a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    s[j] = w[j];
    if (s[j] == 0) continue;
    RatVector peel(a.dim());
    peel[j] = -s[j];
    w = bch_raw(a, w, peel);
  }
  return s;
}

NilElement from_second_kind(const NilAlgebra& a, const RatVector& s) {
  if (s.size() != static_cast<size_t>(a.dim())) {
    throw DimensionMismatch("coordinate count mismatch");
  }
  if (a.step() > 4) throw StepTooHigh("truncated series only covers step <= 4");
  RatVector w(a.dim());
  for (int j = a.dim() - 1; j >= 0; --j) {
    if (s[j] == 0) continue;
    RatVector factor(a.dim());
    factor[j] = s[j];
    w = bch_raw(a, w, factor);
  }
  return NilElement{&a, std::move(w)};
}

bool lattice_membership(const NilElement& x) {
  for (const Rat& c : to_second_kind(x)) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

NilAlgebra heisenberg(int n) {
  if (n < 1) throw DimensionOutOfRange("heisenberg index must be >= 1");
  const int dim = 2 * n + 1;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  names.push_back("Z");
  std::vector<BracketEntry> entries;
  for (int i = 1; i <= n; ++i) {
    entries.push_back(BracketEntry{i, n + i, dim, Rat(1)});
  }
  return NilAlgebra(dim, 2, std::move(names), std::move(entries));
}

NilAutomorphism make_automorphism(const NilAlgebra& a, RatMatrix m) {
  const int n = a.dim();
  if (m.rows != n || m.cols != n) {
    throw DimensionMismatch("automorphism matrix shape mismatch");
  }
  if (rat_rank(m) != n) throw NotInvariant("automorphism matrix is singular");
  for (int i = 0; i < n; ++i) {
    RatVector ei(n), ti(n);
    ei[i] = 1;
    for (int r = 0; r < n; ++r) ti[r] = m.at(r, i);
    for (int j = i + 1; j < n; ++j) {
      RatVector ej(n), tj(n);
      ej[j] = 1;
      for (int r = 0; r < n; ++r) tj[r] = m.at(r, j);
      const RatVector lhs = mat_vec(m, a.bracket(ei, ej));
      const RatVector rhs = a.bracket(ti, tj);
      if (lhs != rhs) {
        throw NotInvariant("matrix does not preserve the bracket");
      }
    }
  }
  return NilAutomorphism{std::move(m)};
}

NilAutomorphism h2_automorphism(const NilAlgebra& h2) {
  if (!(h2 == heisenberg(2))) {
    throw ConstructionInvariantFailed(
        "the order-4 automorphism lives on heisenberg(2)");
  }
  RatMatrix m(5, 5);
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  m.at(2, 3) = 1;
  m.at(3, 2) = -1;
  m.at(4, 4) = -1;
  NilAutomorphism t = make_automorphism(h2, std::move(m));
  if (automorphism_order(t) != 4) {
    throw ConstructionInvariantFailed("automorphism order is not 4");
  }
  RatMatrix diff = t.matrix;
  for (int i = 0; i < 5; ++i) diff.at(i, i) -= 1;
  if (rat_rank(diff) != 5) {
    throw ConstructionInvariantFailed("automorphism must avoid eigenvalue 1");
  }
  return t;
}

NilElement apply(const NilAutomorphism& t, const NilElement& x) {
  if (t.matrix.cols != static_cast<int>(x.coords.size())) {
    throw DimensionMismatch("automorphism and element dimension mismatch");
  }
  return NilElement{x.algebra, mat_vec(t.matrix, x.coords)};
}

long long automorphism_order(const NilAutomorphism& t, long long cap) {
  const int n = t.matrix.rows;
  const RatMatrix id = RatMatrix::identity(n);
  RatMatrix p = t.matrix;
  for (long long k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = rat_mul(p, t.matrix);
  }
  throw NotFiniteOrder("automorphism has no finite order within cap " +
                       std::to_string(cap));
}

bool nil_semidirect_torsion(const NilElement& g, const NilAutomorphism& t,
                            long long j, long long cap) {
  const NilAlgebra& a = *g.algebra;
  const long long ord = automorphism_order(t, cap);
  const long long jm = ((j % ord) + ord) % ord;
  const long long m = ord / std::gcd(ord, jm == 0 ? ord : jm);
  RatMatrix power = RatMatrix::identity(a.dim());
  for (long long i = 0; i < jm; ++i) power = rat_mul(power, t.matrix);
  RatVector acc = g.coords;
  RatVector img = g.coords;
  for (long long i = 1; i < m; ++i) {
    img = mat_vec(power, img);
    acc = bch_raw(a, acc, img);
  }
  return is_zero(acc);
}

namespace {

std::string second_kind_key(const NilAlgebra& a, const RatVector& first_kind,
                            int tpow) {
  const RatVector s = to_second_kind(NilElement{&a, first_kind});
  std::string key;
  for (const Rat& c : s) {
    key += format_rational(c);
    key += ',';
  }
  key += ';';
  key += std::to_string(tpow);
  return key;
}

// Cheap pre-filter key on the raw coordinates. The coordinate change to
// second kind is a bijection, so a hit here means the canonical key is
// already recorded and need not be recomputed.
std::string first_kind_key(const RatVector& coords, int tpow) {
  std::string key;
  for (const Rat& c : coords) {
    key += format_rational(c);
    key += ',';
  }
  key += ';';
  key += std::to_string(tpow);
  return key;
}

struct NilPair {
  RatVector coords;
  int tpow = 0;
};

class NilCensusRun {
 public:
  NilCensusRun(const NilAlgebra& a, const NilAutomorphism* t,
               const CensusCaps& caps)
      : alg_(a), caps_(caps) {
    order_ = (t != nullptr) ? automorphism_order(*t, caps.torsion_order_cap)
                            : 1;
    powers_.push_back(RatMatrix::identity(alg_.dim()));
    for (long long i = 1; i < order_; ++i) {
      powers_.push_back(rat_mul(powers_.back(), t->matrix));
    }
    for (int j = 0; j < alg_.dim(); ++j) {
      RatVector e(alg_.dim());
      e[j] = 1;
      gens_.push_back(NilPair{e, 0});
      for (Rat& c : e) c = -c;
      gens_.push_back(NilPair{std::move(e), 0});
    }
    if (order_ > 1) {
      gens_.push_back(NilPair{RatVector(alg_.dim()), 1});
      gens_.push_back(
          NilPair{RatVector(alg_.dim()), static_cast<int>(order_ - 1)});
    }
    std::vector<NilPair> dedup;
    std::unordered_set<std::string> seen;
    for (NilPair& g : gens_) {
      if (seen.insert(second_kind_key(alg_, g.coords, g.tpow)).second) {
        dedup.push_back(std::move(g));
      }
    }
    gens_ = std::move(dedup);
  }

  std::vector<BallStats> run(const std::vector<int>& radii) {
    if (radii.empty()) throw InsufficientData("no radii requested");
    int prev = 0;
    for (int r : radii) {
      if (r <= prev) {
        throw InsufficientData("radii must be strictly increasing");
      }
      prev = r;
    }
    std::vector<BallStats> out;
    NilPair id{RatVector(alg_.dim()), 0};
    seen_.insert(second_kind_key(alg_, id.coords, id.tpow));
    fk_seen_.insert(first_kind_key(id.coords, id.tpow));
    total_ = 1;
    torsion_ = 1;
    tally(0, true);
    std::vector<NilPair> frontier{std::move(id)};
    size_t next_radius = 0;
    for (int level = 1; level <= radii.back(); ++level) {
      frontier = expand(frontier, level);
      if (level == radii[next_radius]) {
        out.push_back(snapshot(level));
        ++next_radius;
      }
    }
    return out;
  }

 private:
  NilPair compose_pair(const NilPair& x, const NilPair& y) const {
    const int tpow = static_cast<int>((x.tpow + y.tpow) % order_);
    if (is_zero(y.coords)) return NilPair{x.coords, tpow};
    if (x.tpow == 0) return NilPair{bch_raw(alg_, x.coords, y.coords), tpow};
    RatVector img = mat_vec(powers_[static_cast<size_t>(x.tpow)], y.coords);
    return NilPair{bch_raw(alg_, x.coords, img), tpow};
  }

  bool classify(const NilPair& e) const {
    const long long jm = e.tpow;
    const long long m = order_ / std::gcd(order_, jm == 0 ? order_ : jm);
    const RatMatrix& a = powers_[static_cast<size_t>(jm)];
    RatVector acc = e.coords;
    RatVector img = e.coords;
    for (long long i = 1; i < m; ++i) {
      img = mat_vec(a, img);
      acc = bch_raw(alg_, acc, img);
    }
    return is_zero(acc);
  }

  std::vector<NilPair> expand(const std::vector<NilPair>& frontier,
                              int level) {
    std::vector<NilPair> fresh;
    for (const NilPair& e : frontier) {
      for (const NilPair& g : gens_) {
        NilPair c = compose_pair(e, g);
        if (!fk_seen_.insert(first_kind_key(c.coords, c.tpow)).second) {
          continue;
        }
        seen_.insert(second_kind_key(alg_, c.coords, c.tpow));
        if (++total_ > caps_.max_ball_elements) {
          throw BallTooLarge("ball at radius " + std::to_string(level) +
                             " exceeds element cap " +
                             std::to_string(caps_.max_ball_elements));
        }
        fresh.push_back(std::move(c));
      }
    }
    std::vector<unsigned char> flags(fresh.size(), 0);
    internal::parallel_chunks(
        caps_.threads, fresh.size(), [&](size_t begin, size_t end) {
          for (size_t i = begin; i < end; ++i) {
            flags[i] = classify(fresh[i]) ? 1 : 0;
          }
        });
    for (size_t i = 0; i < fresh.size(); ++i) {
      if (flags[i]) ++torsion_;
      tally(fresh[i].tpow, flags[i] != 0);
    }
    return fresh;
  }

  void tally(int tpow, bool torsion) {
    auto it = cosets_.find(tpow);
    if (it == cosets_.end()) {
      it = cosets_
               .emplace(tpow, CosetStat{std::to_string(tpow),
                                        "T^" + std::to_string(tpow), 0, 0})
               .first;
    }
    it->second.count += 1;
    if (torsion) it->second.torsion += 1;
  }

  BallStats snapshot(int radius) const {
    BallStats stats;
    stats.radius = radius;
    stats.total = total_;
    stats.torsion = torsion_;
    stats.generating_set_size = static_cast<int>(gens_.size());
    stats.point_group_order = order_;
    for (const auto& [tpow, c] : cosets_) stats.per_coset.push_back(c);
    return stats;
  }

  const NilAlgebra& alg_;
  CensusCaps caps_;
  long long order_ = 1;
  std::vector<RatMatrix> powers_;
  std::vector<NilPair> gens_;
  std::unordered_set<std::string> seen_;
  std::unordered_set<std::string> fk_seen_;
  std::map<int, CosetStat> cosets_;
  long long total_ = 0;
  long long torsion_ = 0;
};

}  // namespace

std::vector<BallStats> nil_ball_census(const NilAlgebra& a,
                                       const NilAutomorphism* t,
                                       const std::vector<int>& radii,
                                       const CensusCaps& caps) {
  if (a.step() > 4) throw StepTooHigh("truncated series only covers step <= 4");
  NilCensusRun run(a, t, caps);
  return run.run(radii);
}

BallStats nil_ball_bfs(const NilAlgebra& a, const NilAutomorphism* t, int r,
                       const CensusCaps& caps) {
  return nil_ball_census(a, t, {r}, caps).front();
}

double box_norm(const NilElement& x) {
  const RatVector s = to_second_kind(x);
  const std::vector<int>& w = x.algebra->weights();
  double best = 0.0;
  for (size_t i = 0; i < s.size(); ++i) {
    const double v = std::abs(to_double(s[i]));
    if (v == 0.0) continue;
    best = std::max(best, std::pow(v, 1.0 / w[i]));
  }
  return best;
}

BallBoxReport ball_box_comparability(const NilAlgebra& a,
                                     const std::vector<int>& radii,
                                     const CensusCaps& caps) {
  if (radii.size() < 3) {
    throw InsufficientData("comparability fit needs at least 3 radii");
  }
  int prev = 0;
  for (int r : radii) {
    if (r <= prev) throw InsufficientData("radii must be strictly increasing");
    prev = r;
  }
  std::unordered_set<std::string> seen;
  std::vector<RatVector> frontier{RatVector(a.dim())};
  seen.insert(second_kind_key(a, frontier.front(), 0));
  std::vector<RatVector> gens;
  for (int j = 0; j < a.dim(); ++j) {
    RatVector e(a.dim());
    e[j] = 1;
    gens.push_back(e);
    for (Rat& c : e) c = -c;
    gens.push_back(std::move(e));
  }
  long long total = 1;
  double lo = 1.0, hi = 1.0;
  std::vector<BallStats> series;
  size_t next_radius = 0;
  for (int level = 1; level <= radii.back(); ++level) {
    std::vector<RatVector> fresh;
    for (const RatVector& e : frontier) {
      for (const RatVector& g : gens) {
        RatVector c = bch_raw(a, e, g);
        if (!seen.insert(second_kind_key(a, c, 0)).second) continue;
        if (++total > caps.max_ball_elements) {
          throw BallTooLarge("ball at radius " + std::to_string(level) +
                             " exceeds element cap " +
                             std::to_string(caps.max_ball_elements));
        }
        const double ratio =
            box_norm(NilElement{&a, c}) / static_cast<double>(level);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        fresh.push_back(std::move(c));
      }
    }
    frontier = std::move(fresh);
    if (next_radius < radii.size() && level == radii[next_radius]) {
      BallStats s;
      s.radius = level;
      s.total = total;
      series.push_back(std::move(s));
      ++next_radius;
    }
  }
  BallBoxReport report;
  report.constant_a = std::max(hi, lo > 0 ? 1.0 / lo : 1.0);
  report.growth_slope = growth_degree_fit(series);
  return report;
}

bool low_dim_nonabelian_check(const NilAlgebra& a,
                              const std::vector<NilAutomorphism>& autos,
                              long long cap) {
  if (a.dim() != 3 && a.dim() != 4) {
    throw DimensionOutOfRange("check applies in dimension 3 or 4");
  }
  if (a.is_abelian()) throw NotNonabelian("check needs a nonabelian algebra");
  for (const NilAutomorphism& t : autos) {
    automorphism_order(t, cap);  // finite order required
    RatMatrix diff = t.matrix;
    for (int i = 0; i < diff.rows; ++i) diff.at(i, i) -= 1;
    if (rat_rank(diff) == diff.rows) return false;  // no eigenvalue 1
  }
  return true;
}

NilDensityValue nil_density_value(const NilAutomorphism& t, long long cap) {
  NilDensityValue out;
  out.group_order = automorphism_order(t, cap);
  const int n = t.matrix.rows;
  RatMatrix p = RatMatrix::identity(n);
  for (long long j = 0; j < out.group_order; ++j) {
    RatMatrix diff = p;
    for (int i = 0; i < n; ++i) diff.at(i, i) -= 1;
    if (rat_rank(diff) == n) ++out.m;
    p = rat_mul(p, t.matrix);
  }
  out.density = Rat(Int(out.m), Int(out.group_order));
  return out;
}

}  // namespace crystden
