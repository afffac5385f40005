#include "permlab/families.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "permlab/error.hpp"

namespace permlab
{

namespace
{

void require_first_letter(int n, int k)
{
  if (n < 1 || k == 0 || std::abs(k) > n) {
    throw invalid_input("first letter " + std::to_string(k) + " out of range for n=" +
                        std::to_string(n));
  }
}

BigInt power(long base, int exp)
{
  BigInt r;
  BigInt const b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

BigInt binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// One step of the polynomial recurrence from level n-1 to level n.
IntPoly typeb_step(const IntPoly &prev, int n, bool negative)
{
  // (1 + (2n-3)t) or ((2n-1)t - 1)
  IntPoly const linear = negative ? IntPoly{-1, 2L * n - 1} : IntPoly{1, 2L * n - 3};
  IntPoly const two_t_one_minus_t{0, 2, -2};
  return linear * prev + two_t_one_minus_t * derivative(prev);
}

} // namespace

IntPoly eulerian_a(int n)
{
  if (n < 0)
    throw invalid_input("eulerian_a: n must be >= 0");
  IntPoly a{1};
  IntPoly const t_one_minus_t{0, 1, -1};
  for (int m = 2; m <= n; ++m)
    a = IntPoly{1, m - 1L} * a + t_one_minus_t * derivative(a);
  return a;
}

BigInt eulerian_number(int n, int j)
{
  return eulerian_a(n).coeff(j);
}

BigInt conger_count(int n, int dsc, int j)
{
  if (n < 1 || j < 1 || j > n)
    throw invalid_input("conger_count: need 1 <= j <= n");
  if (dsc < 0 || dsc > n - 1)
    throw invalid_input("conger_count: need 0 <= dsc <= n-1");
  BigInt sum = 0;
  for (int k = 0; k <= dsc; ++k) {
    BigInt term = binomial(n, dsc - k) * power(k, j - 1) * power(k + 1, n - j);
    if ((dsc - k) % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

IntPoly typeb_des_poly_rec(int n, int k)
{
  require_first_letter(n, k);
  int const m = std::abs(k);
  bool const negative = k < 0;

  IntPoly b;
  if (m == 1)
    b = negative ? IntPoly{0, 1} : IntPoly{1};
  else
    b = (eulerian_a(m - 1) * power(2, m - 1)).shifted(1);

  for (int level = m + 1; level <= n; ++level)
    b = typeb_step(b, level, negative);
  return b;
}

BigInt typeb_count_rec(int n, int dsc, int k)
{
  require_first_letter(n, k);
  if (dsc < 0 || dsc > n)
    throw invalid_input("typeb_count_rec: need 0 <= dsc <= n");
  int const m = std::abs(k);
  bool const negative = k < 0;

  // row[d] = B_{level,d,k}
  std::vector<BigInt> row(m + 1, BigInt(0));
  if (m == 1) {
    row[negative ? 1 : 0] = 1;
  } else {
    BigInt const scale = power(2, m - 1);
    for (int d = 1; d <= m; ++d)
      row[d] = scale * eulerian_number(m - 1, d - 1);
  }

  for (int level = m + 1; level <= n; ++level) {
    std::vector<BigInt> next(level + 1, BigInt(0));
    auto at = [&row](int d) -> BigInt {
      return d >= 0 && d < static_cast<int>(row.size()) ? row[d] : BigInt(0);
    };
    for (int d = 0; d <= level; ++d) {
      if (negative)
        next[d] = (2L * d - 1) * at(d) + (2L * (level - d) + 1) * at(d - 1);
      else
        next[d] = (2L * d + 1) * at(d) + (2L * (level - d - 1) + 1) * at(d - 1);
    }
    row = std::move(next);
  }
  return row[dsc];
}

IntPoly lemma_drop_rhs(int n_plus_one, int k)
{
  int const n = n_plus_one - 1;
  return lemma_drop_rhs(n_plus_one, k, [n](int i) { return typeb_des_poly_rec(n, i); });
}

IntPoly lemma_drop_rhs(int n_plus_one, int k, const RestrictedFamily &level)
{
  require_first_letter(n_plus_one, k);
  int const n = n_plus_one - 1;
  if (n < 1)
    throw invalid_input("lemma_drop_rhs: need n+1 >= 2");

  IntPoly plain, times_t;
  if (k > 0) {
    for (int i = -n; i <= -1; ++i)
      plain += level(i);
    for (int i = 1; i <= k - 1; ++i)
      times_t += level(i);
    for (int i = k; i <= n; ++i)
      plain += level(i);
  } else {
    // k is the negated first letter; its level-n neighbours relabel so that
    // letters below k land on -n..k and letters between k and 0 on k+1..-1
    for (int i = -n; i <= k; ++i)
      times_t += level(i);
    for (int i = k + 1; i <= -1; ++i)
      plain += level(i);
    for (int i = 1; i <= n; ++i)
      times_t += level(i);
  }
  return plain + times_t.shifted(1);
}

IntPoly symmetrized_bar(int n, int k)
{
  if (k < 1 || k > n)
    throw invalid_input("symmetrized_bar: need 1 <= k <= n");
  return typeb_des_poly_rec(n, k) + typeb_des_poly_rec(n, -k);
}

IntPoly symmetrized_tilde(int n, int k)
{
  if (k < 1 || k > n)
    throw invalid_input("symmetrized_tilde: need 1 <= k <= n");
  return typeb_des_poly_rec(n, k).shifted(1) + typeb_des_poly_rec(n, -k);
}

} // namespace permlab
