#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "crystden/nilpotent.hpp"

using namespace crystden;

namespace {

NilAlgebra filiform(int dim, int step) {
  // [X_1, X_i] = X_{i+1} for i = 2..dim-1.
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) names.push_back("X" + std::to_string(i));
  std::vector<BracketEntry> entries;
  for (int i = 2; i < dim; ++i) {
    entries.push_back(BracketEntry{1, i, i + 1, Rat(1)});
  }
  return NilAlgebra(dim, step, std::move(names), std::move(entries));
}

RatVector vec(std::initializer_list<Rat> coords) { return RatVector(coords); }

Rat random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Rat(num(rng), den(rng));
}

// Independent model of the rank-one Heisenberg lattice: upper
// unitriangular integer matrices encoded as (x, y, z) with
// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy'). Entry coordinates coincide
// with coordinates of the second kind.
struct H3 {
  long long x = 0, y = 0, z = 0;
  auto operator<=>(const H3&) const = default;
  H3 mul(const H3& o) const { return {x + o.x, y + o.y, z + o.z + x * o.y}; }
};

std::vector<long long> h3_direct_counts(const std::vector<int>& radii) {
  std::vector<H3> gens = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                          {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::set<H3> seen{{}};
  std::vector<H3> frontier{{}};
  std::vector<long long> out;
  size_t next = 0;
  for (int level = 1; level <= radii.back(); ++level) {
    std::vector<H3> fresh;
    for (const H3& e : frontier) {
      for (const H3& g : gens) {
        H3 c = e.mul(g);
        if (seen.insert(c).second) fresh.push_back(c);
      }
    }
    frontier = std::move(fresh);
    if (next < radii.size() && level == radii[next]) {
      out.push_back(static_cast<long long>(seen.size()));
      ++next;
    }
  }
  return out;
}

// Independent model of the rank-two Heisenberg lattice extended by its
// order-4 automorphism. Coordinates (x1, x2, y1, y2, z) multiply by
// z'' = z + z' + x1 y1' + x2 y2'; the automorphism permutes the blocks
// coordinatewise, so it stays linear in these coordinates:
// (x1,x2,y1,y2,z) -> (-x2, x1, y2, -y1, -z).
struct H5 {
  std::array<long long, 5> c{};
  auto operator<=>(const H5&) const = default;
  H5 mul(const H5& o) const {
    H5 r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
    r.c[4] = c[4] + o.c[4] + c[0] * o.c[2] + c[1] * o.c[3];
    return r;
  }
  bool is_id() const { return *this == H5{}; }
};

H5 tau(const H5& m) {
  return H5{{-m.c[1], m.c[0], m.c[3], -m.c[2], -m.c[4]}};
}

H5 tau_pow(H5 m, int k) {
  for (int i = 0; i < (k % 4 + 4) % 4; ++i) m = tau(m);
  return m;
}

struct H5Pair {
  H5 m;
  int t = 0;
  auto operator<=>(const H5Pair&) const = default;
  H5Pair mul(const H5Pair& o) const {
    return H5Pair{m.mul(tau_pow(o.m, t)), (t + o.t) % 4};
  }
  bool torsion() const {
    const int mm = 4 / std::gcd(4, t == 0 ? 4 : t);
    H5 acc = m, img = m;
    for (int i = 1; i < mm; ++i) {
      img = tau_pow(img, t);
      acc = acc.mul(img);
    }
    return acc.is_id();
  }
};

struct H5Census {
  long long total = 0, torsion = 0;
  std::map<int, std::pair<long long, long long>> cosets;  // count, torsion
};

H5Census h5_direct_census(int radius) {
  std::vector<H5Pair> gens;
  for (int i = 0; i < 5; ++i) {
    H5 e;
    e.c[static_cast<size_t>(i)] = 1;
    gens.push_back(H5Pair{e, 0});
    e.c[static_cast<size_t>(i)] = -1;
    gens.push_back(H5Pair{e, 0});
  }
  gens.push_back(H5Pair{{}, 1});
  gens.push_back(H5Pair{{}, 3});
  std::set<H5Pair> seen{{}};
  std::vector<H5Pair> frontier{{}};
  for (int level = 1; level <= radius; ++level) {
    std::vector<H5Pair> fresh;
    for (const H5Pair& e : frontier) {
      for (const H5Pair& g : gens) {
        H5Pair c = e.mul(g);
        if (seen.insert(c).second) fresh.push_back(c);
      }
    }
    frontier = std::move(fresh);
  }
  H5Census out;
  for (const H5Pair& e : seen) {
    ++out.total;
    const bool tor = e.torsion();
    if (tor) ++out.torsion;
    auto& slot = out.cosets[e.t];
    ++slot.first;
    if (tor) ++slot.second;
  }
  return out;
}

}  // namespace

TEST_CASE("algebra construction validates its bracket table") {
  NilAlgebra h1 = heisenberg(1);
  CHECK(h1.dim() == 3);
  CHECK(h1.step() == 2);
  CHECK(h1.weights() == std::vector<int>{1, 1, 2});
  CHECK(!h1.is_abelian());

  // Brackets may only raise the basis index.
  CHECK_THROWS_AS(NilAlgebra(3, 2, {"a", "b", "c"},
                             {BracketEntry{2, 3, 1, Rat(1)}}),
                  ConstructionInvariantFailed);
  // [X, X] must vanish.
  CHECK_THROWS_AS(NilAlgebra(3, 2, {"a", "b", "c"},
                             {BracketEntry{2, 2, 3, Rat(1)}}),
                  ConstructionInvariantFailed);
  // Indices are 1-based.
  CHECK_THROWS_AS(NilAlgebra(3, 2, {"a", "b", "c"},
                             {BracketEntry{0, 1, 2, Rat(1)}}),
                  DimensionOutOfRange);
  // One name per basis vector.
  CHECK_THROWS_AS(NilAlgebra(3, 2, {"a", "b"},
                             {BracketEntry{1, 2, 3, Rat(1)}}),
                  DimensionMismatch);
  // Declared step must match the computed series.
  CHECK_THROWS_AS(NilAlgebra(3, 3, {"a", "b", "c"},
                             {BracketEntry{1, 2, 3, Rat(1)}}),
                  ConstructionInvariantFailed);
}

TEST_CASE("Jacobi violations are caught") {
  // With [x2,x4] = x5 added to the filiform table, the identity on
  // (x1, x2, x3) picks up an uncancelled -x5.
  std::vector<BracketEntry> entries = {
      {1, 2, 3, Rat(1)}, {1, 3, 4, Rat(1)}, {1, 4, 5, Rat(1)},
      {2, 3, 5, Rat(1)}, {2, 4, 5, Rat(1)},
  };
  CHECK_THROWS_AS(NilAlgebra(5, 4, {"a", "b", "c", "d", "e"}, entries),
                  ConstructionInvariantFailed);
}

TEST_CASE("lower central series ranks and growth degree") {
  LowerCentral h1 = lower_central_series(heisenberg(1));
  CHECK(h1.ranks == std::vector<int>{2, 1});
  CHECK(h1.degree == 4);

  LowerCentral h2 = lower_central_series(heisenberg(2));
  CHECK(h2.ranks == std::vector<int>{4, 1});
  CHECK(h2.degree == 6);

  LowerCentral f4 = lower_central_series(filiform(4, 3));
  CHECK(f4.ranks == std::vector<int>{2, 1, 1});
  CHECK(f4.degree == 7);

  LowerCentral abelian = lower_central_series(
      NilAlgebra(3, 1, {"a", "b", "c"}, {}));
  CHECK(abelian.ranks == std::vector<int>{3});
  CHECK(abelian.degree == 3);
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  NilAlgebra a = filiform(5, 4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    RatVector u(5), v(5), w(5);
    for (int i = 0; i < 5; ++i) {
      u[static_cast<size_t>(i)] = random_rational(rng);
      v[static_cast<size_t>(i)] = random_rational(rng);
      w[static_cast<size_t>(i)] = random_rational(rng);
    }
    RatVector uv = a.bracket(u, v);
    RatVector vu = a.bracket(v, u);
    for (int i = 0; i < 5; ++i) {
      CHECK(uv[static_cast<size_t>(i)] == -vu[static_cast<size_t>(i)]);
    }
    RatVector vw(5);
    for (int i = 0; i < 5; ++i) {
      vw[static_cast<size_t>(i)] =
          v[static_cast<size_t>(i)] + w[static_cast<size_t>(i)];
    }
    RatVector left = a.bracket(u, vw);
    RatVector right1 = a.bracket(u, v);
    RatVector right2 = a.bracket(u, w);
    for (int i = 0; i < 5; ++i) {
      CHECK(left[static_cast<size_t>(i)] ==
            right1[static_cast<size_t>(i)] + right2[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("products in the rank-one Heisenberg group") {
  NilAlgebra h1 = heisenberg(1);
  NilElement x = nil_element(h1, vec({Rat(1), Rat(0), Rat(0)}));
  NilElement y = nil_element(h1, vec({Rat(0), Rat(1), Rat(0)}));
  // exp(X) exp(Y) = exp(X + Y + Z/2).
  CHECK(bch_multiply(x, y).coords == vec({Rat(1), Rat(1), Rat(1, 2)}));
  CHECK(bch_multiply(y, x).coords == vec({Rat(1), Rat(1), Rat(-1, 2)}));
  // Commutator [exp X, exp Y] = exp Z.
  NilElement comm = bch_multiply(
      bch_multiply(bch_multiply(x, y), nil_inverse(x)), nil_inverse(y));
  CHECK(comm.coords == vec({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("degree-three terms appear in the filiform product") {
  NilAlgebra f = filiform(4, 3);
  NilElement x = nil_element(f, vec({Rat(1), Rat(0), Rat(0), Rat(0)}));
  NilElement y = nil_element(f, vec({Rat(0), Rat(1), Rat(0), Rat(0)}));
  // x + y + [x,y]/2 + [x,[x,y]]/12 with [x,[x,y]] = e4.
  CHECK(bch_multiply(x, y).coords ==
        vec({Rat(1), Rat(1), Rat(1, 2), Rat(1, 12)}));
  CHECK(bch_multiply(y, x).coords ==
        vec({Rat(1), Rat(1), Rat(-1, 2), Rat(1, 12)}));
}

TEST_CASE("group axioms hold exactly on random elements") {
  for (const NilAlgebra& a :
       {heisenberg(1), heisenberg(2), filiform(4, 3), filiform(5, 4)}) {
    std::mt19937 rng(11);
    const int n = a.dim();
    for (int trial = 0; trial < 60; ++trial) {
      RatVector cx(static_cast<size_t>(n)), cy(static_cast<size_t>(n)),
          cz(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        cx[static_cast<size_t>(i)] = random_rational(rng);
        cy[static_cast<size_t>(i)] = random_rational(rng);
        cz[static_cast<size_t>(i)] = random_rational(rng);
      }
      NilElement x = nil_element(a, cx), y = nil_element(a, cy),
                 z = nil_element(a, cz);
      CHECK(bch_multiply(bch_multiply(x, y), z) ==
            bch_multiply(x, bch_multiply(y, z)));
      CHECK(bch_multiply(x, nil_inverse(x)) == nil_identity(a));
      CHECK(bch_multiply(x, nil_identity(a)) == x);
      CHECK(bch_multiply(nil_identity(a), x) == x);
    }
  }
}

TEST_CASE("step five is out of contract") {
  NilAlgebra f5 = filiform(6, 5);
  NilElement x = nil_element(f5, RatVector(6, Rat(1)));
  CHECK_THROWS_AS(bch_multiply(x, x), StepTooHigh);
  CHECK_THROWS_AS(nil_ball_census(f5, nullptr, {2}), StepTooHigh);
}

TEST_CASE("coordinates of the second kind in the Heisenberg group") {
  NilAlgebra h1 = heisenberg(1);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Rat x = random_rational(rng), y = random_rational(rng),
        z = random_rational(rng);
    // exp(zZ) exp(yY) exp(xX) = exp(xX + yY + (z - xy/2) Z), so the
    // second-kind z-coordinate sits above the exponential one by xy/2.
    CHECK(to_second_kind(nil_element(h1, vec({x, y, z}))) ==
          vec({x, y, z + x * y / 2}));
    CHECK(from_second_kind(h1, vec({x, y, z})).coords ==
          vec({x, y, z - x * y / 2}));
  }
}

TEST_CASE("second-kind conversion round trips on every test algebra") {
  for (const NilAlgebra& a :
       {heisenberg(1), heisenberg(2), filiform(4, 3), filiform(5, 4)}) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      RatVector c(static_cast<size_t>(a.dim()));
      for (auto& e : c) e = random_rational(rng);
      NilElement x = nil_element(a, c);
      CHECK(from_second_kind(a, to_second_kind(x)) == x);
      CHECK(to_second_kind(from_second_kind(a, c)) == c);
    }
  }
}

TEST_CASE("integral second-kind coordinates form a subgroup") {
  NilAlgebra h1 = heisenberg(1);
  CHECK(lattice_membership(from_second_kind(h1, vec({Rat(1), Rat(1), Rat(0)}))));
  // Exponential (1,1,0) has second-kind z = 1/2.
  CHECK(!lattice_membership(nil_element(h1, vec({Rat(1), Rat(1), Rat(0)}))));

  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (const NilAlgebra& a : {heisenberg(1), heisenberg(2)}) {
    for (int trial = 0; trial < 50; ++trial) {
      RatVector u(static_cast<size_t>(a.dim())),
          v(static_cast<size_t>(a.dim()));
      for (auto& e : u) e = coord(rng);
      for (auto& e : v) e = coord(rng);
      NilElement g = from_second_kind(a, u), h = from_second_kind(a, v);
      CHECK(lattice_membership(bch_multiply(g, h)));
      CHECK(lattice_membership(nil_inverse(g)));
    }
  }

  // Not a general fact: in the filiform algebra the product of two
  // integral points picks up a twelfth that the peeling turns into a
  // half, so the integral set there is not closed.
  NilAlgebra f = filiform(4, 3);
  NilElement e1 = nil_element(f, vec({Rat(1), Rat(0), Rat(0), Rat(0)}));
  NilElement e2 = nil_element(f, vec({Rat(0), Rat(1), Rat(0), Rat(0)}));
  CHECK(lattice_membership(e1));
  CHECK(lattice_membership(e2));
  CHECK(to_second_kind(bch_multiply(e1, e2)) ==
        vec({Rat(1), Rat(1), Rat(1), Rat(1, 2)}));
  CHECK(!lattice_membership(bch_multiply(e1, e2)));
}

TEST_CASE("automorphism validation checks the bracket") {
  NilAlgebra h1 = heisenberg(1);
  // X -> Y, Y -> -X, Z -> Z preserves [X,Y] = Z.
  RatMatrix good(3, 3);
  good.at(0, 1) = -1;
  good.at(1, 0) = 1;
  good.at(2, 2) = 1;
  NilAutomorphism t = make_automorphism(h1, good);
  CHECK(automorphism_order(t) == 4);

  // Swapping X and Y flips the bracket sign.
  RatMatrix swap(3, 3);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  swap.at(2, 2) = 1;
  CHECK_THROWS_AS(make_automorphism(h1, swap), NotInvariant);
  CHECK_THROWS_AS(make_automorphism(h1, RatMatrix(3, 3)), NotInvariant);
}

TEST_CASE("the order-4 automorphism of the rank-two Heisenberg algebra") {
  NilAlgebra h2 = heisenberg(2);
  NilAutomorphism t = h2_automorphism(h2);
  CHECK(automorphism_order(t) == 4);
  // X1 -> X2.
  NilElement x1 = nil_element(h2, vec({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}));
  CHECK(apply(t, x1).coords ==
        vec({Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}));
  // T and T^3 fix nothing; T^2 fixes exactly the center. This is the
  // whole reason the density comes out to 1/2.
  RatMatrix p = t.matrix;
  for (int i = 1; i < 4; ++i) {
    RatMatrix diff = p;
    for (int j = 0; j < 5; ++j) diff.at(j, j) -= 1;
    CHECK(rat_rank(diff) == (i == 2 ? 4 : 5));
    p = rat_mul(p, t.matrix);
  }
  CHECK(p == RatMatrix::identity(5));

  CHECK_THROWS_AS(h2_automorphism(heisenberg(1)), ConstructionInvariantFailed);
}

TEST_CASE("infinite-order automorphisms are rejected") {
  NilAlgebra abelian(2, 1, {"a", "b"}, {});
  RatMatrix shear = RatMatrix::identity(2);
  shear.at(0, 1) = 1;
  NilAutomorphism t = make_automorphism(abelian, shear);
  CHECK_THROWS_AS(automorphism_order(t, 100), NotFiniteOrder);
}

TEST_CASE("torsion in the semidirect product") {
  NilAlgebra h2 = heisenberg(2);
  NilAutomorphism t = h2_automorphism(h2);
  const auto elt = [&](std::initializer_list<Rat> c) {
    return nil_element(h2, RatVector(c));
  };
  NilElement id = nil_identity(h2);
  NilElement x1 = elt({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  NilElement y1 = elt({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)});
  NilElement z = elt({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});

  // In the lattice coset only the identity is torsion.
  CHECK(nil_semidirect_torsion(id, t, 0));
  CHECK(!nil_semidirect_torsion(x1, t, 0));

  // Against T the orbit sums cancel.
  CHECK(nil_semidirect_torsion(id, t, 1));
  CHECK(nil_semidirect_torsion(x1, t, 1));
  CHECK(nil_semidirect_torsion(z, t, 1));
  CHECK(nil_semidirect_torsion(y1, t, 2));
  // (z, T^2) squares to the translation by 2z.
  CHECK(!nil_semidirect_torsion(z, t, 2));
  // Power indices reduce mod the order.
  CHECK(nil_semidirect_torsion(x1, t, 5) ==
        nil_semidirect_torsion(x1, t, 1));
}

TEST_CASE("exact census over the cyclic automorphism group") {
  NilDensityValue v = nil_density_value(h2_automorphism(heisenberg(2)));
  CHECK(v.group_order == 4);
  CHECK(v.m == 2);
  CHECK(v.density == Rat(1, 2));
}

TEST_CASE("Heisenberg ball counts match the matrix model") {
  const std::vector<int> radii = {1, 2, 3, 4, 5};
  auto expected = h3_direct_counts(radii);
  auto series = nil_ball_census(heisenberg(1), nullptr, radii);
  REQUIRE(series.size() == expected.size());
  for (size_t i = 0; i < series.size(); ++i) {
    CHECK(series[i].total == expected[i]);
    CHECK(series[i].torsion == 1);
  }
}

TEST_CASE("semidirect census matches the matrix model") {
  NilAlgebra h2 = heisenberg(2);
  NilAutomorphism t = h2_automorphism(h2);
  for (int r : {1, 2, 3}) {
    H5Census expected = h5_direct_census(r);
    BallStats got = nil_ball_bfs(h2, &t, r);
    CHECK(got.total == expected.total);
    CHECK(got.torsion == expected.torsion);
    REQUIRE(got.per_coset.size() == expected.cosets.size());
    for (const auto& c : got.per_coset) {
      const auto& slot = expected.cosets.at(std::stoi(c.key));
      CHECK(c.count == slot.first);
      CHECK(c.torsion == slot.second);
    }
  }
}

TEST_CASE("censuses are deterministic across thread counts") {
  NilAlgebra h2 = heisenberg(2);
  NilAutomorphism t = h2_automorphism(h2);
  CensusCaps one, four;
  four.threads = 4;
  BallStats a = nil_ball_bfs(h2, &t, 3, one);
  BallStats b = nil_ball_bfs(h2, &t, 3, four);
  CHECK(a.total == b.total);
  CHECK(a.torsion == b.torsion);
  REQUIRE(a.per_coset.size() == b.per_coset.size());
  for (size_t i = 0; i < a.per_coset.size(); ++i) {
    CHECK(a.per_coset[i].count == b.per_coset[i].count);
    CHECK(a.per_coset[i].torsion == b.per_coset[i].torsion);
  }
}

TEST_CASE("census caps and schedule validation") {
  NilAlgebra h1 = heisenberg(1);
  CensusCaps tiny;
  tiny.max_ball_elements = 5;
  CHECK_THROWS_AS(nil_ball_bfs(h1, nullptr, 2, tiny), BallTooLarge);
  CHECK_THROWS_AS(nil_ball_census(h1, nullptr, {3, 2}), InsufficientData);
  CHECK_THROWS_AS(nil_ball_census(h1, nullptr, {}), InsufficientData);
}

TEST_CASE("box norm uses the filtration weights") {
  NilAlgebra h1 = heisenberg(1);
  CHECK(box_norm(from_second_kind(h1, vec({Rat(3), Rat(2), Rat(9)}))) ==
        doctest::Approx(3.0));
  CHECK(box_norm(from_second_kind(h1, vec({Rat(0), Rat(0), Rat(-16)}))) ==
        doctest::Approx(4.0));
  CHECK(box_norm(nil_identity(h1)) == doctest::Approx(0.0));
}

TEST_CASE("box norm and word length are comparable") {
  BallBoxReport rep = ball_box_comparability(heisenberg(1), {4, 6, 8});
  CHECK(rep.constant_a >= 1.0);
  CHECK(rep.constant_a < 20.0);
  CHECK(rep.growth_slope > 3.0);
  CHECK(rep.growth_slope < 5.0);
  CHECK_THROWS_AS(ball_box_comparability(heisenberg(1), {4, 8}),
                  InsufficientData);
}

TEST_CASE("finite-order automorphisms in low dimension fix a vector") {
  NilAlgebra h1 = heisenberg(1);
  RatMatrix r(3, 3);
  r.at(0, 1) = -1;
  r.at(1, 0) = 1;
  r.at(2, 2) = 1;
  RatMatrix s(3, 3);
  s.at(0, 0) = -1;
  s.at(1, 1) = -1;
  s.at(2, 2) = 1;
  std::vector<NilAutomorphism> autos = {make_automorphism(h1, r),
                                        make_automorphism(h1, s)};
  CHECK(low_dim_nonabelian_check(h1, autos));

  CHECK_THROWS_AS(low_dim_nonabelian_check(heisenberg(2), {}),
                  DimensionOutOfRange);
  CHECK_THROWS_AS(
      low_dim_nonabelian_check(NilAlgebra(3, 1, {"a", "b", "c"}, {}), {}),
      NotNonabelian);
}

TEST_CASE("algebra equality is structural") {
  CHECK(heisenberg(1) ==
        NilAlgebra(3, 2, {"X1", "Y1", "Z"}, {BracketEntry{1, 2, 3, Rat(1)}}));
  CHECK(!(heisenberg(1) == filiform(4, 3)));
}
