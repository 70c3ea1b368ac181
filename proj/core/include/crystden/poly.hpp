#pragma once

#include <vector>

#include "crystden/matrix.hpp"

namespace crystden {

/// Integer polynomial, coefficients ascending by degree, no trailing zeros.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  bool operator==(const IntPoly& other) const = default;
};

IntPoly poly_mul(const IntPoly& x, const IntPoly& y);
IntPoly poly_sub(const IntPoly& x, const IntPoly& y);

/// Exact division by a monic divisor; throws NotMonic or on a remainder.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den);

/// x^m - 1.
IntPoly x_pow_minus_one(long long m);

long long euler_totient(long long m);

/// Cyclotomic polynomial, computed by dividing x^m - 1 by the proper
/// cyclotomic factors. Requires m >= 1.
IntPoly cyclotomic(long long m);

/// Companion matrix of a monic p = x^d - sum a_i x^i: ones on the
/// subdiagonal, last column the a_i.
IntMatrix companion(const IntPoly& p);

}  // namespace crystden
