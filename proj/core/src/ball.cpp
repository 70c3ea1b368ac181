#include "crystden/ball_bfs.hpp"
#include "crystden/ball_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "internal_parallel.hpp"

namespace crystden {

const CosetStat* BallStats::find_coset(const std::string& coset_key) const {
  for (const CosetStat& c : per_coset) {
    if (c.key == coset_key) return &c;
  }
  return nullptr;
}

Rat empirical_density(const BallStats& stats) {
  if (stats.total <= 0) throw InsufficientData("empty ball");
  return Rat(Int(stats.torsion), Int(stats.total));
}

Rat coset_equidistribution(const BallStats& stats) {
  if (stats.total <= 0 || stats.point_group_order <= 0) {
    throw InsufficientData("empty ball");
  }
  const Rat uniform(Int(1), Int(stats.point_group_order));
  Rat worst = 0;
  for (const CosetStat& c : stats.per_coset) {
    Rat dev = Rat(Int(c.count), Int(stats.total)) - uniform;
    if (dev < 0) dev = -dev;
    worst = std::max(worst, dev);
  }
  if (static_cast<long long>(stats.per_coset.size()) <
      stats.point_group_order) {
    worst = std::max(worst, uniform);  // absent cosets deviate fully
  }
  return worst;
}

namespace {

double least_squares_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  const size_t n = xs.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double num = 0, den = 0;
  for (size_t i = 0; i < n; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

void check_fit_radii(const std::vector<BallStats>& series) {
  if (series.size() < 3) {
    throw InsufficientData("slope fit needs at least 3 radii");
  }
  int prev = 0;
  for (const BallStats& s : series) {
    if (s.radius < 4) throw InsufficientData("slope fit needs radii >= 4");
    if (s.radius <= prev) {
      throw InsufficientData("slope fit needs strictly increasing radii");
    }
    prev = s.radius;
  }
}

}  // namespace

double growth_degree_fit(const std::vector<BallStats>& series) {
  check_fit_radii(series);
  std::vector<double> xs, ys;
  for (const BallStats& s : series) {
    xs.push_back(std::log(static_cast<double>(s.radius)));
    ys.push_back(std::log(static_cast<double>(s.total)));
  }
  return least_squares_slope(xs, ys);
}

double torsion_coset_exponent(const std::vector<BallStats>& series,
                              const IntMatrix& coset) {
  check_fit_radii(series);
  const std::string key = coset.key();
  std::vector<double> xs, ys;
  for (const BallStats& s : series) {
    const CosetStat* c = s.find_coset(key);
    if (c == nullptr || c->torsion <= 0) {
      throw EmptyCoset("coset has no torsion at radius " +
                       std::to_string(s.radius));
    }
    xs.push_back(std::log(static_cast<double>(s.radius)));
    ys.push_back(std::log(static_cast<double>(c->torsion)));
  }
  return least_squares_slope(xs, ys);
}

namespace {

std::vector<AffineElement> symmetrize(const std::vector<AffineElement>& s) {
  std::vector<AffineElement> out;
  std::unordered_set<std::string> seen;
  for (const AffineElement& g : s) {
    if (seen.insert(g.key()).second) out.push_back(g);
    AffineElement inv = inverse(g);
    if (seen.insert(inv.key()).second) out.push_back(std::move(inv));
  }
  return out;
}

/// Memoized torsion machinery per linear part: the order k of A and the
/// geometric sum I + A + ... + A^{k-1}. (v, A) is torsion iff sum v = 0.
struct LinearTorsion {
  long long order = 0;
  IntMatrix sum;
};

class CensusRun {
 public:
  CensusRun(const CrystGroup& g, const std::vector<AffineElement>& s,
            const CensusCaps& caps)
      : group_(g), caps_(caps), sym_(symmetrize(s)) {}

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
    AffineElement id = affine_identity(group_.dim);
    seen_.insert(id.key());
    tally(id, true);
    total_ = 1;
    torsion_ = 1;
    std::vector<AffineElement> frontier{std::move(id)};
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
  std::vector<AffineElement> expand(const std::vector<AffineElement>& frontier,
                                    int level) {
    std::vector<AffineElement> fresh;
    for (const AffineElement& e : frontier) {
      for (const AffineElement& g : sym_) {
        AffineElement c = compose(e, g);
        if (!seen_.insert(c.key()).second) continue;
        if (++total_ > caps_.max_ball_elements) {
          throw BallTooLarge("ball at radius " + std::to_string(level) +
                             " exceeds element cap " +
                             std::to_string(caps_.max_ball_elements));
        }
        fresh.push_back(std::move(c));
      }
    }
    // Classification reads the memo only, so fill it ahead of the
    // parallel pass.
    for (const AffineElement& e : fresh) linear_info(e.lin);
    std::vector<unsigned char> flags(fresh.size(), 0);
    internal::parallel_chunks(
        caps_.threads, fresh.size(), [&](size_t begin, size_t end) {
          for (size_t i = begin; i < end; ++i) {
            const LinearTorsion& info = memo_.at(fresh[i].lin.key());
            flags[i] =
                is_zero(mat_vec(info.sum, fresh[i].trans)) ? 1 : 0;
          }
        });
    for (size_t i = 0; i < fresh.size(); ++i) {
      if (flags[i]) ++torsion_;
      tally(fresh[i], flags[i] != 0);
    }
    return fresh;
  }

  const LinearTorsion& linear_info(const IntMatrix& lin) {
    const std::string key = lin.key();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    LinearTorsion info;
    info.order = mat_order(lin, caps_.torsion_order_cap);
    info.sum = IntMatrix::identity(lin.n);
    IntMatrix power = lin;
    for (long long i = 1; i < info.order; ++i) {
      for (size_t e = 0; e < info.sum.a.size(); ++e) {
        info.sum.a[e] += power.a[e];
      }
      if (i + 1 < info.order) power = mat_mul(power, lin);
    }
    return memo_.emplace(key, std::move(info)).first->second;
  }

  void tally(const AffineElement& e, bool torsion) {
    const std::string key = e.lin.key();
    auto it = cosets_.find(key);
    if (it == cosets_.end()) {
      it = cosets_.emplace(key, CosetStat{key, matrix_text(e.lin), 0, 0})
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
    stats.generating_set_size = static_cast<int>(sym_.size());
    stats.point_group_order = group_.point_group.order();
    for (const auto& [key, c] : cosets_) stats.per_coset.push_back(c);
    return stats;
  }

  const CrystGroup& group_;
  CensusCaps caps_;
  std::vector<AffineElement> sym_;
  std::unordered_set<std::string> seen_;
  std::unordered_map<std::string, LinearTorsion> memo_;
  std::map<std::string, CosetStat> cosets_;  // sorted by key
  long long total_ = 0;
  long long torsion_ = 0;
};

}  // namespace

std::vector<BallStats> ball_census(const CrystGroup& g,
                                   const std::vector<AffineElement>& s,
                                   const std::vector<int>& radii,
                                   const CensusCaps& caps) {
  CensusRun run(g, s, caps);
  return run.run(radii);
}

std::vector<BallStats> ball_census(const CrystGroup& g,
                                   const std::vector<int>& radii,
                                   const CensusCaps& caps) {
  return ball_census(g, g.gens, radii, caps);
}

BallStats ball_bfs(const CrystGroup& g, const std::vector<AffineElement>& s,
                   int r, const CensusCaps& caps) {
  return ball_census(g, s, {r}, caps).front();
}

bool full_coset_check(const CrystGroup& g, const IntMatrix& a, int box_radius,
                      const CensusCaps& caps) {
  if (has_eigenvalue_one(a)) {
    throw EigenvalueOnePresent("coset matrix fixes a nonzero vector");
  }
  if (box_radius < 0) throw InsufficientData("negative box radius");

  const std::vector<AffineElement> sym = symmetrize(g.gens);
  const std::string target = a.key();
  const bool in_group = std::any_of(
      g.point_group.elements.begin(), g.point_group.elements.end(),
      [&](const IntMatrix& e) { return e.key() == target; });
  if (!in_group) {
    throw EmptyCoset("matrix is not a point-group part of the group");
  }

  // Shortest representative of the A-coset, by plain BFS.
  std::unordered_set<std::string> seen;
  std::vector<AffineElement> frontier{affine_identity(g.dim)};
  seen.insert(frontier.front().key());
  AffineElement rep = frontier.front();
  int rep_length = -1;
  if (target == rep.lin.key()) rep_length = 0;
  long long visited = 1;
  for (int level = 1; rep_length < 0; ++level) {
    std::vector<AffineElement> next;
    for (const AffineElement& e : frontier) {
      for (const AffineElement& s : sym) {
        AffineElement c = compose(e, s);
        if (!seen.insert(c.key()).second) continue;
        if (++visited > caps.max_ball_elements) {
          throw BallTooLarge("coset representative search exceeded cap");
        }
        if (rep_length < 0 && c.lin.key() == target) {
          rep = c;
          rep_length = level;
        }
        next.push_back(std::move(c));
      }
    }
    if (next.empty() && rep_length < 0) {
      throw EmptyCoset("matrix is not a point-group part of the group");
    }
    frontier = std::move(next);
  }

  // Radius wide enough that every coset element with translation in the
  // box appears; assumes the standard lattice, with slack for generating
  // sets whose translations come from glide pairs.
  long long reach = rep_length;
  for (int i = 0; i < g.dim; ++i) {
    double t = std::abs(to_double(rep.trans[i]));
    reach += 2 * (box_radius + static_cast<long long>(std::ceil(t)) + 1);
  }

  const Rat box(box_radius);
  bool found = false;
  seen.clear();
  frontier = {affine_identity(g.dim)};
  seen.insert(frontier.front().key());
  visited = 1;
  auto consider = [&](const AffineElement& e) -> bool {
    if (e.lin.key() != target) return true;
    for (const Rat& x : e.trans) {
      if (x > box || x < -box) return true;
    }
    found = true;
    return is_torsion(e, caps.torsion_order_cap).torsion;
  };
  if (!consider(frontier.front())) return false;
  for (long long level = 1; level <= reach; ++level) {
    std::vector<AffineElement> next;
    for (const AffineElement& e : frontier) {
      for (const AffineElement& s : sym) {
        AffineElement c = compose(e, s);
        if (!seen.insert(c.key()).second) continue;
        if (++visited > caps.max_ball_elements) {
          throw BallTooLarge("coset box sweep exceeded cap");
        }
        if (!consider(c)) return false;
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  if (!found) throw EmptyCoset("no coset element inside the box");
  return true;
}

}  // namespace crystden
