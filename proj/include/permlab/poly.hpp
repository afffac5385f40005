#ifndef PERMLAB_POLY_HPP
#define PERMLAB_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace permlab
{

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense univariate polynomial in t over the integers. coeffs()[i] is the
/// coefficient of t^i; no trailing zeros are stored, so the zero polynomial
/// has an empty coefficient vector and degree -1.
class IntPoly
{
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt &c);
  /// c * t^k
  static IntPoly monomial(const BigInt &c, int k);
  /// (1 + t)^k
  static IntPoly one_plus_t_pow(int k);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt> &coeffs() const noexcept { return c_; }

  /// Coefficient of t^i, zero outside the support.
  BigInt coeff(int i) const;
  const BigInt &leading() const { return c_.back(); }

  /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const noexcept;

  IntPoly &operator+=(const IntPoly &o);
  IntPoly &operator-=(const IntPoly &o);
  IntPoly &operator*=(const BigInt &s);

  friend IntPoly operator+(IntPoly a, const IntPoly &b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly &b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) { return a *= BigInt(-1); }
  friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
  friend IntPoly operator*(IntPoly a, const BigInt &s) { return a *= s; }
  friend IntPoly operator*(const BigInt &s, IntPoly a) { return a *= s; }

  friend bool operator==(const IntPoly &, const IntPoly &) = default;

  /// Multiply by t^k.
  IntPoly shifted(int k) const;

  BigInt eval(const BigInt &x) const;
  BigRat eval(const BigRat &x) const;

private:
  void trim();
  std::vector<BigInt> c_;
};

IntPoly derivative(const IntPoly &f);
IntPoly scalar_mul(const IntPoly &f, const BigInt &s);

/// gcd of the coefficients (nonnegative); zero for the zero polynomial.
BigInt content(const IntPoly &f);

/// f / content(f) with a positive leading coefficient.
IntPoly primitive_part(const IntPoly &f);

/// Pseudo-remainder with a sign-preserving multiplier: returns r with
/// |lc(g)|^(deg f - deg g + 1) * f = q * g + r and deg r < deg g.
IntPoly sign_preserving_prem(const IntPoly &f, const IntPoly &g);

/// Exact division over Z. Throws invalid_input if g does not divide f in Z[t].
IntPoly exact_quotient(const IntPoly &f, const IntPoly &g);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(const IntPoly &f, const IntPoly &g);

/// "16t+66t^2+36t^3+2t^4"; "0" for the zero polynomial.
std::string to_string(const IntPoly &f);

/// Builds a polynomial from a histogram (entry i = coefficient of t^i).
IntPoly from_counts(const std::vector<std::uint64_t> &counts);

} // namespace permlab

#endif // PERMLAB_POLY_HPP
