#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "crystden/matrix.hpp"
#include "crystden/poly.hpp"
#include "crystden/rational.hpp"

using namespace crystden;

namespace {

IntMatrix mat2(long long a, long long b, long long c, long long d) {
  IntMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

IntMatrix mat3(std::initializer_list<long long> rows) {
  IntMatrix m(3);
  auto it = rows.begin();
  for (int i = 0; i < 9; ++i, ++it) m.a[static_cast<size_t>(i)] = *it;
  return m;
}

IntPoly poly(std::initializer_list<long long> ascending) {
  std::vector<Int> c;
  for (long long v : ascending) c.emplace_back(v);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing accepts exactly the p/q grammar") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7/2") == Rat(-7, 2));
  CHECK(parse_rational("5") == Rat(5));
  CHECK(parse_rational("0") == Rat(0));
  CHECK(parse_rational("-0") == Rat(0));
  CHECK(parse_rational("6/4") == Rat(3, 2));  // normalized on construction

  CHECK_THROWS_AS(parse_rational(""), InvalidRational);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("a"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("3/0"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidRational);
  CHECK_THROWS_AS(parse_rational(" 1"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("+1"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("2/"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("/2"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("1e3"), InvalidRational);
}

TEST_CASE("rational formatting is reduced and round trips") {
  CHECK(format_rational(Rat(1, 4)) == "1/4");
  CHECK(format_rational(Rat(-1, 4)) == "-1/4");
  CHECK(format_rational(Rat(8, 4)) == "2");
  CHECK(format_rational(Rat(0)) == "0");
  CHECK(format_rational(Rat(5, 6)) == "5/6");
  for (const char* s : {"23/24", "-11/12", "0", "7"}) {
    CHECK(format_rational(parse_rational(s)) == s);
  }
}

TEST_CASE("big integers format identically through the fast path") {
  // 2^80 is far outside the machine-word fast path.
  Int big = Int(1) << 80;
  std::string out;
  append_int_text(out, big);
  CHECK(out == big.str());
  out.clear();
  append_int_text(out, Int(-123456789));
  CHECK(out == "-123456789");
}

TEST_CASE("matrix product matches a hand-computed value") {
  // [[1,2],[3,4]] * [[5,6],[7,8]] = [[19,22],[43,50]].
  CHECK(mat_mul(mat2(1, 2, 3, 4), mat2(5, 6, 7, 8)) ==
        mat2(19, 22, 43, 50));
  CHECK_THROWS_AS(mat_mul(mat2(1, 0, 0, 1), IntMatrix(3)), DimensionMismatch);
}

TEST_CASE("determinant oracles") {
  CHECK(mat_det(mat2(1, 2, 3, 4)) == -2);
  // Cofactor expansion: 2*(1*1-0*3) - 0 + 1*(1*3-1*0) = 5.
  CHECK(mat_det(mat3({2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
  CHECK(mat_det(IntMatrix::identity(5)) == 1);
  CHECK(mat_det(IntMatrix(4)) == 0);

  // Entries near 2^31 force the overflow guards; the 2x2 formula is the
  // independent check.
  const long long big = 2147483647;
  IntMatrix m = mat2(big, big - 1, big - 2, big - 3);
  CHECK(mat_det(m) == Int(big) * (big - 3) - Int(big - 1) * (big - 2));
}

TEST_CASE("determinant is multiplicative on random integer matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a(4), b(4);
    for (auto& e : a.a) e = coef(rng);
    for (auto& e : b.a) e = coef(rng);
    CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
  }
}

TEST_CASE("block-diagonal determinants stay exact at high dimension") {
  // diag of 10 blocks [[0,-1],[1,0]], det 1 each.
  IntMatrix m(20);
  for (int b = 0; b < 10; ++b) {
    m.at(2 * b, 2 * b + 1) = -1;
    m.at(2 * b + 1, 2 * b) = 1;
  }
  CHECK(mat_det(m) == 1);
  CHECK(mat_order(m) == 4);
}

TEST_CASE("eigenvalue-one detection") {
  CHECK(has_eigenvalue_one(IntMatrix::identity(3)));
  CHECK(has_eigenvalue_one(mat2(1, 0, 0, -1)));   // reflection fixes a line
  CHECK(!has_eigenvalue_one(mat2(0, -1, 1, 0)));  // quarter turn
  CHECK(!has_eigenvalue_one(mat2(-1, 0, 0, -1)));
  CHECK(has_eigenvalue_one(mat2(1, 1, 0, 1)));    // shear fixes e1
}

TEST_CASE("matrix orders of the standard finite elements") {
  CHECK(mat_order(IntMatrix::identity(2)) == 1);
  CHECK(mat_order(mat2(-1, 0, 0, -1)) == 2);
  CHECK(mat_order(mat2(0, -1, 1, 0)) == 4);
  CHECK(mat_order(mat2(1, -1, 1, 0)) == 6);
  CHECK(mat_order(mat2(0, -1, 1, -1)) == 3);
  CHECK(mat_order(companion(cyclotomic(12))) == 12);
  CHECK_THROWS_AS(mat_order(mat2(1, 1, 0, 1)), OrderExceedsCap);
}

TEST_CASE("rational rank and kernel") {
  RatMatrix m(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)});
  CHECK(rat_rank(m) == 1);
  auto kernel = rational_kernel(m);
  REQUIRE(kernel.size() == 1);
  // Kernel vector must satisfy m k = 0.
  CHECK(kernel[0][0] * 1 + kernel[0][1] * 2 == 0);

  CHECK(rat_rank(RatMatrix::identity(4)) == 4);
  CHECK(rational_kernel(RatMatrix::identity(3)).empty());
}

TEST_CASE("fixed-set dimensions agree between quotient and projection") {
  // Quarter turn on the first two coordinates, identity on the third;
  // W = the fixed axis. Both constructions give dimension 1.
  IntMatrix a(3);
  a.at(0, 1) = -1;
  a.at(1, 0) = 1;
  a.at(2, 2) = 1;
  std::vector<RatVector> w{{Rat(0), Rat(0), Rat(1)}};
  CHECK(quotient_fix_projection_check(a, w, 720));

  // W not invariant: the quarter turn moves span(e1).
  std::vector<RatVector> bad{{Rat(1), Rat(0), Rat(0)}};
  CHECK_THROWS_AS(quotient_fix_projection_check(a, bad, 720), NotInvariant);

  // Infinite order must be rejected, not looped on.
  IntMatrix shear = IntMatrix::identity(3);
  shear.at(0, 1) = 1;
  CHECK_THROWS_AS(quotient_fix_projection_check(shear, w, 720),
                  OrderExceedsCap);
}

TEST_CASE("polynomial arithmetic and exact division") {
  // (x-1)(x+1) = x^2 - 1.
  CHECK(poly_mul(poly({-1, 1}), poly({1, 1})) == poly({-1, 0, 1}));
  CHECK(poly_div_exact(poly({-1, 0, 1}), poly({-1, 1})) == poly({1, 1}));
  CHECK_THROWS_AS(poly_div_exact(poly({1, 0, 1}), poly({-1, 1})), Error);
  CHECK(x_pow_minus_one(3) == poly({-1, 0, 0, 1}));
}

TEST_CASE("Euler totient values through 12") {
  const long long expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (long long m = 1; m <= 12; ++m) {
    CHECK(euler_totient(m) == expected[m - 1]);
  }
}

TEST_CASE("cyclotomic polynomials match the classical table") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(3) == poly({1, 1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(8) == poly({1, 0, 0, 0, 1}));
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("product of cyclotomics over divisors gives x^n - 1") {
  for (long long n : {6, 12, 30}) {
    IntPoly prod = poly({1});
    for (long long d = 1; d <= n; ++d) {
      if (n % d == 0) prod = poly_mul(prod, cyclotomic(d));
    }
    CHECK(prod == x_pow_minus_one(n));
  }
}

TEST_CASE("companion matrices of cyclotomics") {
  // Companion of x^2 + x + 1: subdiagonal ones, last column -coeffs.
  CHECK(companion(cyclotomic(3)) == mat2(0, -1, 1, -1));
  CHECK(companion(cyclotomic(4)) == mat2(0, -1, 1, 0));
  CHECK(companion(cyclotomic(6)) == mat2(0, -1, 1, 1));
  CHECK_THROWS_AS(companion(poly({1, 0, 2})), NotMonic);

  // The companion of the m-th cyclotomic has order exactly m.
  for (long long m : {2, 3, 4, 5, 6, 8, 9, 12}) {
    CHECK(mat_order(companion(cyclotomic(m))) == m);
  }
}
