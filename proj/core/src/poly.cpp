#include "crystden/poly.hpp"

#include <algorithm>

namespace crystden {

namespace {

void normalize(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
  normalize(c);
}

IntPoly poly_mul(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return IntPoly{};
  std::vector<Int> out(x.c.size() + y.c.size() - 1);
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (size_t j = 0; j < y.c.size(); ++j) {
      out[i + j] += x.c[i] * y.c[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly poly_sub(const IntPoly& x, const IntPoly& y) {
  std::vector<Int> out(std::max(x.c.size(), y.c.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < x.c.size()) out[i] += x.c[i];
    if (i < y.c.size()) out[i] -= y.c[i];
  }
  return IntPoly(std::move(out));
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den) {
  if (!den.is_monic()) throw NotMonic("division requires a monic divisor");
  if (num.is_zero()) return IntPoly{};
  if (num.degree() < den.degree()) {
    throw ParseError("inexact polynomial division");
  }
  std::vector<Int> rem = num.c;
  const int dd = den.degree();
  std::vector<Int> quot(num.degree() - dd + 1);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Int q = rem[k + dd];
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * den.c[j];
  }
  for (const Int& r : rem) {
    if (r != 0) throw ParseError("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly x_pow_minus_one(long long m) {
  std::vector<Int> c(static_cast<size_t>(m) + 1);
  c[0] = -1;
  c[static_cast<size_t>(m)] = 1;
  return IntPoly(std::move(c));
}

long long euler_totient(long long m) {
  long long result = m;
  long long x = m;
  for (long long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      result -= result / p;
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

IntPoly cyclotomic(long long m) {
  if (m < 1) throw DimensionOutOfRange("cyclotomic index must be >= 1");
  std::vector<long long> divisors;
  for (long long d = 1; d <= m; ++d) {
    if (m % d == 0) divisors.push_back(d);
  }
  std::vector<IntPoly> phi(divisors.size());
  for (size_t i = 0; i < divisors.size(); ++i) {
    IntPoly p = x_pow_minus_one(divisors[i]);
    for (size_t j = 0; j < i; ++j) {
      if (divisors[i] % divisors[j] == 0) p = poly_div_exact(p, phi[j]);
    }
    phi[i] = std::move(p);
  }
  return phi.back();
}

IntMatrix companion(const IntPoly& p) {
  if (!p.is_monic() || p.degree() < 1) {
    throw NotMonic("companion matrix requires a monic polynomial of degree >= 1");
  }
  const int d = p.degree();
  IntMatrix m(d);
  for (int i = 0; i + 1 < d; ++i) m.at(i + 1, i) = 1;
  for (int i = 0; i < d; ++i) m.at(i, d - 1) = -p.c[static_cast<size_t>(i)];
  return m;
}

}  // namespace crystden
