#include "permlab/series.hpp"

#include <algorithm>

#include "permlab/error.hpp"

namespace permlab
{

TruncatedSeries::TruncatedSeries(int order)
{
  if (order < 0)
    throw invalid_input("truncation order must be >= 0");
  c_.assign(order + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs, int order)
: c_(std::move(coeffs))
{
  if (order < 0)
    throw invalid_input("truncation order must be >= 0");
  c_.resize(order + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::from_poly(const IntPoly &f, int order)
{
  TruncatedSeries s(order);
  for (int i = 0; i <= std::min(order, f.degree()); ++i)
    s.c_[i] = f.coeffs()[i];
  return s;
}

TruncatedSeries TruncatedSeries::inverse_one_minus_t_pow(int m, int order)
{
  if (m < 0)
    throw invalid_input("negative power of (1 - t)^-1");
  TruncatedSeries s(order);
  for (int k = 0; k <= order; ++k) {
    if (m == 0) {
      s.c_[k] = k == 0 ? 1 : 0;
      continue;
    }
    mpz_bin_uiui(s.c_[k].get_mpz_t(), static_cast<unsigned long>(m - 1 + k),
                 static_cast<unsigned long>(k));
  }
  return s;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
  int const order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.c_[i] == 0)
      continue;
    for (int j = 0; i + j <= order; ++j)
      out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
  int const order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i)
    out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

std::optional<int> first_difference(const TruncatedSeries &a, const TruncatedSeries &b)
{
  int const order = std::min(a.order(), b.order());
  for (int i = 0; i <= order; ++i)
    if (a[i] != b[i])
      return i;
  return std::nullopt;
}

std::string to_string(const TruncatedSeries &s)
{
  std::string out = "(";
  for (int i = 0; i <= s.order(); ++i) {
    if (i)
      out += ", ";
    out += s[i].get_str();
  }
  return out + ")";
}

} // namespace permlab
