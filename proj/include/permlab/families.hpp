#ifndef PERMLAB_FAMILIES_HPP
#define PERMLAB_FAMILIES_HPP

#include <functional>

#include "permlab/poly.hpp"

namespace permlab
{

/// A_n(t) from the insertion recurrence
/// A_n = (1 + (n-1)t) A_{n-1} + t(1-t) A'_{n-1}, A_0 = 1.
IntPoly eulerian_a(int n);

/// Number of permutations of S_n with j descents (0 outside the range).
BigInt eulerian_number(int n, int j);

/// Alternating-sum count of permutations in S_n that start with j and have
/// dsc descents: sum_{k=0}^{dsc} (-1)^{dsc-k} C(n, dsc-k) k^{j-1} (k+1)^{n-j},
/// with 0^0 = 1.
BigInt conger_count(int n, int dsc, int j);

/// Descent polynomial B_{n,k}(t) of signed permutations with pi_1 = k,
/// computed from the polynomial recurrence alone. 1 <= |k| <= n.
///
///   B_{n,k}  = (1 + (2n-3)t) B_{n-1,k}  + 2t(1-t) B'_{n-1,k}     (k > 0)
///   B_{n,-k} = ((2n-1)t - 1) B_{n-1,-k} + 2t(1-t) B'_{n-1,-k}
///
/// from B_{1,1} = 1, B_{1,-1} = t and, for n >= 2, the boundary
/// B_{n,+-n} = 2^(n-1) t A_{n-1}(t).
IntPoly typeb_des_poly_rec(int n, int k);

/// Coefficient [t^dsc] B_{n,k}(t) from the coefficient-level recurrence
///
///   B_{n,d,k}  = (2d+1) B_{n-1,d,k}  + (2(n-d-1)+1) B_{n-1,d-1,k}
///   B_{n,d,-k} = (2d-1) B_{n-1,d,-k} + (2(n-d)+1)   B_{n-1,d-1,-k}
///
/// seeded at n = 1 (|k| = 1) or at the boundary n = |k|, where
/// B_{n,d,+-n} = 2^(n-1) * #{pi in S_{n-1} : des(pi) = d-1}.
BigInt typeb_count_rec(int n, int dsc, int k);

/// Level-n polynomials B_{n,i}, indexed by signed first letter i.
using RestrictedFamily = std::function<IntPoly(int)>;

/// Right-hand side of the first-letter deletion identity for B_{n+1,k}:
///
///   k > 0:  sum_{i<0} B_{n,i} + t sum_{i=1}^{k-1} B_{n,i} + sum_{i=k}^{n} B_{n,i}
///   k < 0:  t sum_{i=-n}^{k} B_{n,i} + sum_{i=k+1}^{-1} B_{n,i} + t sum_{i>0} B_{n,i}
///
/// The default family is typeb_des_poly_rec at level n.
IntPoly lemma_drop_rhs(int n_plus_one, int k);
IntPoly lemma_drop_rhs(int n_plus_one, int k, const RestrictedFamily &level);

/// B_{n,k} + B_{n,-k}, palindromic about n/2.
IntPoly symmetrized_bar(int n, int k);
/// t B_{n,k} + B_{n,-k}, palindromic about (n+1)/2.
IntPoly symmetrized_tilde(int n, int k);

} // namespace permlab

#endif // PERMLAB_FAMILIES_HPP
