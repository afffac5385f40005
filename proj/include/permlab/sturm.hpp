#ifndef PERMLAB_STURM_HPP
#define PERMLAB_STURM_HPP

#include <vector>

#include "permlab/poly.hpp"

namespace permlab
{

/// Sturm chain f, f', -prem(f, f'), ... kept primitive over Z. Pseudo-
/// remainders use |lc|^k multipliers so each member has the sign of the
/// classical rational remainder sequence.
std::vector<IntPoly> sturm_chain(const IntPoly &f);

/// Number of distinct real roots of f (nonzero), by sign variations of the
/// Sturm chain at -infinity and +infinity.
int count_distinct_real_roots(const IntPoly &f);

/// f divided by gcd(f, f'), primitive.
IntPoly square_free_part(const IntPoly &f);

/// True iff every complex root of f is real. Factors of t are stripped, the
/// square-free part is taken, and its real roots are counted with a Sturm
/// chain. Throws invalid_input for the zero polynomial.
bool is_real_rooted(const IntPoly &f);

} // namespace permlab

#endif // PERMLAB_STURM_HPP
