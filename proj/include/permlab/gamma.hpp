#ifndef PERMLAB_GAMMA_HPP
#define PERMLAB_GAMMA_HPP

#include <vector>

#include "permlab/poly.hpp"

namespace permlab
{

/// Expansion f(t) = sum_i gamma_i t^i (1+t)^(m-2i), 0 <= i <= floor(m/2).
/// m is twice the center of symmetry.
struct GammaVector
{
  std::vector<BigInt> gamma;
  int m = 0;

  IntPoly reconstruct() const;
  bool nonnegative() const;
};

/// a_i = a_{m-i} for 0 <= i <= m. Throws invalid_input when m < deg f.
bool is_palindromic(const IntPoly &f, int m);

/// Peels gamma_i off the coefficient of t^i after subtracting the lower
/// basis terms. Throws invalid_input for non-palindromic input or a nonzero
/// residual.
GammaVector gamma_vector(const IntPoly &f, int m);

} // namespace permlab

#endif // PERMLAB_GAMMA_HPP
