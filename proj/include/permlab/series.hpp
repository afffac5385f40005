#ifndef PERMLAB_SERIES_HPP
#define PERMLAB_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "permlab/poly.hpp"

namespace permlab
{

/// Power series a_0 + a_1 t + ... + a_K t^K, exact modulo t^(K+1).
class TruncatedSeries
{
public:
  /// Zero series of truncation order K.
  explicit TruncatedSeries(int order);
  TruncatedSeries(std::vector<BigInt> coeffs, int order);

  static TruncatedSeries from_poly(const IntPoly &f, int order);

  /// (1 - t)^(-m) = sum_k C(m-1+k, k) t^k.
  static TruncatedSeries inverse_one_minus_t_pow(int m, int order);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt> &coeffs() const noexcept { return c_; }
  const BigInt &operator[](int i) const { return c_[i]; }

  friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
  friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  std::vector<BigInt> c_;
};

/// First index where a and b differ, or nullopt when they agree up to the
/// smaller truncation order.
std::optional<int> first_difference(const TruncatedSeries &a, const TruncatedSeries &b);

std::string to_string(const TruncatedSeries &s);

} // namespace permlab

#endif // PERMLAB_SERIES_HPP
