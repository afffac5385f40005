#include "permlab/gamma.hpp"

#include <string>

#include "permlab/error.hpp"

namespace permlab
{

IntPoly GammaVector::reconstruct() const
{
  IntPoly f;
  for (int i = 0; i < static_cast<int>(gamma.size()); ++i) {
    if (gamma[i] != 0)
      f += (IntPoly::one_plus_t_pow(m - 2 * i) * gamma[i]).shifted(i);
  }
  return f;
}

bool GammaVector::nonnegative() const
{
  for (const auto &g : gamma)
    if (g < 0)
      return false;
  return true;
}

bool is_palindromic(const IntPoly &f, int m)
{
  if (m < f.degree()) {
    throw invalid_input("palindromic check with m=" + std::to_string(m) + " below degree " +
                        std::to_string(f.degree()));
  }
  for (int i = 0; i <= m; ++i)
    if (f.coeff(i) != f.coeff(m - i))
      return false;
  return true;
}

GammaVector gamma_vector(const IntPoly &f, int m)
{
  if (!is_palindromic(f, m))
    throw invalid_input("gamma_vector: " + to_string(f) + " is not palindromic about " +
                        std::to_string(m) + "/2");
  GammaVector out;
  out.m = m;
  IntPoly residual = f;
  for (int i = 0; 2 * i <= m; ++i) {
    BigInt const g = residual.coeff(i);
    out.gamma.push_back(g);
    if (g != 0)
      residual -= (IntPoly::one_plus_t_pow(m - 2 * i) * g).shifted(i);
  }
  if (!residual.is_zero())
    throw invalid_input("gamma_vector: nonzero residual " + to_string(residual));
  return out;
}

} // namespace permlab
