#include "permlab/carlitz.hpp"

#include <cstdlib>
#include <string>

#include "permlab/error.hpp"
#include "permlab/families.hpp"

namespace permlab
{

namespace
{

void require_args(int n, int i, int order)
{
  if (n < 1 || i == 0 || std::abs(i) > n)
    throw invalid_input("carlitz: need 1 <= |i| <= n, got n=" + std::to_string(n) +
                        ", i=" + std::to_string(i));
  if (order < 0)
    throw invalid_input("carlitz: truncation order must be >= 0");
}

BigInt power(long base, int exp)
{
  BigInt r;
  BigInt const b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

} // namespace

TruncatedSeries carlitz_lhs(int n, int i, int order)
{
  require_args(n, i, order);
  return carlitz_lhs(typeb_des_poly_rec(n, i), n, order);
}

TruncatedSeries carlitz_lhs(const IntPoly &b_ni, int n, int order)
{
  return TruncatedSeries::from_poly(b_ni, order) * TruncatedSeries::inverse_one_minus_t_pow(n, order);
}

TruncatedSeries carlitz_rhs(int n, int i, int order, CarlitzForm form)
{
  require_args(n, i, order);
  int const m = std::abs(i);
  int const first = (form == CarlitzForm::corrected && i > 0) ? 0 : 1;
  std::vector<BigInt> c(order + 1, BigInt(0));
  for (int k = first; k <= order; ++k) {
    long const odd = i > 0 ? 2L * k + 1 : 2L * k - 1;
    c[k] = power(odd, n - m) * power(2L * k, m - 1);
  }
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries brenti_lhs(int n, int order)
{
  if (n < 1 || order < 0)
    throw invalid_input("brenti: need n >= 1 and order >= 0");
  IntPoly total;
  for (int k = 1; k <= n; ++k)
    total += typeb_des_poly_rec(n, k) + typeb_des_poly_rec(n, -k);
  return TruncatedSeries::from_poly(total, order) *
         TruncatedSeries::inverse_one_minus_t_pow(n + 1, order);
}

TruncatedSeries brenti_rhs(int n, int order)
{
  if (n < 1 || order < 0)
    throw invalid_input("brenti: need n >= 1 and order >= 0");
  std::vector<BigInt> c(order + 1);
  for (int k = 0; k <= order; ++k)
    c[k] = power(2L * k + 1, n);
  return TruncatedSeries(std::move(c), order);
}

} // namespace permlab
