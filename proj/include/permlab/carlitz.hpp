#ifndef PERMLAB_CARLITZ_HPP
#define PERMLAB_CARLITZ_HPP

#include "permlab/poly.hpp"
#include "permlab/series.hpp"

namespace permlab
{

/// Which summation range the closed-form side uses.
enum class CarlitzForm
{
  /// Positive i sums from k = 0 (0^0 = 1), negative i from k = 1. This is
  /// the form that matches B_{n,i}(t) / (1-t)^n.
  corrected,
  /// Both signs sum from k = 1. Drops the constant term 1 when i = 1.
  printed
};

/// B_{n,i}(t) * (1-t)^(-n), truncated at t^order. B_{n,i} comes from the
/// polynomial recurrence unless supplied.
TruncatedSeries carlitz_lhs(int n, int i, int order);
TruncatedSeries carlitz_lhs(const IntPoly &b_ni, int n, int order);

/// sum_k (2k+1)^(n-i) (2k)^(i-1) t^k for i > 0,
/// sum_k (2k-1)^(n-|i|) (2k)^(|i|-1) t^k for i < 0.
TruncatedSeries carlitz_rhs(int n, int i, int order, CarlitzForm form = CarlitzForm::corrected);

/// (sum_{k in +-[n]} B_{n,k}(t)) * (1-t)^(-(n+1)).
TruncatedSeries brenti_lhs(int n, int order);

/// sum_{k>=0} (2k+1)^n t^k.
TruncatedSeries brenti_rhs(int n, int order);

} // namespace permlab

#endif // PERMLAB_CARLITZ_HPP
