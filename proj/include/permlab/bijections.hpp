#ifndef PERMLAB_BIJECTIONS_HPP
#define PERMLAB_BIJECTIONS_HPP

#include "permlab/group.hpp"
#include "permlab/order.hpp"

namespace permlab
{

/// Reversal of the color set [d]_0: j -> d-1-j.
inline int complement_color(int color, int d) noexcept { return d - 1 - color; }

/// The involution s on [n] x [d]_0: value 1 stays, other values i map to
/// n+2-i; colors are complemented.
inline Letter min_one_swap(Letter l, int n, int d) noexcept
{
  return {l.value == 1 ? 1 : n + 2 - l.value, complement_color(l.color, d)};
}

/// The involution t on [n] x I: (i, j) -> (i, -j).
inline Letter negate_color(Letter l) noexcept { return {l.value, -l.color}; }

/// Cycle-arrangement bijection with ldes(phi(p, L), L) = lexc(p, L).
///
/// Each cycle is rotated so its L-largest letter comes last, cycles are
/// listed by those last letters in decreasing L order, the parentheses are
/// dropped and the word is reversed. Unsigned groups only.
ColoredPerm phi(const ColoredPerm &p, const LinearOrder &order);

/// Reverse the word, cut after each right-to-left L-maximum, rebuild cycles.
ColoredPerm phi_inverse(const ColoredPerm &w, const LinearOrder &order);

/// Min-one bijection: ldes(gamma_min_one(p)) = lexc(p) under the min-one
/// order, and S_(i,j) is carried onto S_(s(i,j)).
///
/// s is applied to every entry of the decorated cycle form; then each cycle
/// is rotated so its min-one-smallest letter is last and cycles are listed
/// by those letters in increasing order.
ColoredPerm gamma_min_one(const ColoredPerm &p);
ColoredPerm gamma_min_one_inverse(const ColoredPerm &w);

/// Symmetric bijection on signed groups: ldes(gamma_symmetric(p)) under the
/// symmetric order equals bexc(p).
///
/// Entries of non-trivial cycles get their color negated (fixed points keep
/// theirs); each cycle is rotated so its smallest value is last; cycles are
/// listed by increasing last value. S_(i,j) goes to S_(i,-j) for i >= 2 and
/// S_(1,j) to itself, since pi_1 = 1 is a fixed point.
ColoredPerm gamma_symmetric(const ColoredPerm &p);
ColoredPerm gamma_symmetric_inverse(const ColoredPerm &w);

} // namespace permlab

#endif // PERMLAB_BIJECTIONS_HPP
