#include "permlab/poly.hpp"

#include <algorithm>

#include "permlab/error.hpp"

namespace permlab
{

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
  c_.reserve(coeffs.size());
  for (long c : coeffs)
    c_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs)
: c_(std::move(coeffs))
{
  trim();
}

IntPoly IntPoly::constant(const BigInt &c)
{
  return IntPoly(std::vector<BigInt>{c});
}

IntPoly IntPoly::monomial(const BigInt &c, int k)
{
  std::vector<BigInt> v(k + 1, BigInt(0));
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_plus_t_pow(int k)
{
  std::vector<BigInt> v(k + 1);
  for (int i = 0; i <= k; ++i) {
    mpz_bin_uiui(v[i].get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
  }
  return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int i) const
{
  if (i < 0 || i > degree())
    return 0;
  return c_[i];
}

int IntPoly::low_degree() const noexcept
{
  for (int i = 0; i <= degree(); ++i)
    if (c_[i] != 0)
      return i;
  return -1;
}

void IntPoly::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

IntPoly &IntPoly::operator+=(const IntPoly &o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly &IntPoly::operator*=(const BigInt &s)
{
  for (auto &c : c_)
    c *= s;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly &a, const IntPoly &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const
{
  if (is_zero())
    return {};
  std::vector<BigInt> v(k, BigInt(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

BigInt IntPoly::eval(const BigInt &x) const
{
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

BigRat IntPoly::eval(const BigRat &x) const
{
  BigRat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + BigRat(*it);
  acc.canonicalize();
  return acc;
}

IntPoly derivative(const IntPoly &f)
{
  if (f.degree() < 1)
    return {};
  std::vector<BigInt> v(f.degree());
  for (int i = 1; i <= f.degree(); ++i)
    v[i - 1] = f.coeffs()[i] * i;
  return IntPoly(std::move(v));
}

IntPoly scalar_mul(const IntPoly &f, const BigInt &s)
{
  return f * s;
}

BigInt content(const IntPoly &f)
{
  BigInt g = 0;
  for (const auto &c : f.coeffs())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly &f)
{
  if (f.is_zero())
    return {};
  BigInt g = content(f);
  if (f.leading() < 0)
    g = -g;
  std::vector<BigInt> v = f.coeffs();
  for (auto &c : v)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly sign_preserving_prem(const IntPoly &f, const IntPoly &g)
{
  if (g.is_zero())
    throw invalid_input("pseudo-remainder by the zero polynomial");
  if (f.degree() < g.degree())
    return f;

  BigInt const lead = abs(g.leading());
  bool const flip = g.leading() < 0;
  std::vector<BigInt> r = f.coeffs();
  int const dg = g.degree();
  for (int top = f.degree(); top >= dg; --top) {
    // r <- |lc(g)| r - sgn(lc g) r_top t^(top-dg) g, which clears degree top
    BigInt factor = r[top];
    if (flip)
      factor = -factor;
    for (auto &c : r)
      c *= lead;
    for (int j = 0; j <= dg; ++j)
      r[top - dg + j] -= factor * g.coeffs()[j];
  }
  r.resize(dg);
  return IntPoly(std::move(r));
}

IntPoly exact_quotient(const IntPoly &f, const IntPoly &g)
{
  if (g.is_zero())
    throw invalid_input("division by the zero polynomial");
  if (f.is_zero())
    return {};
  if (f.degree() < g.degree())
    throw invalid_input("exact_quotient: divisor does not divide dividend");

  std::vector<BigInt> r = f.coeffs();
  int const dg = g.degree();
  std::vector<BigInt> q(f.degree() - dg + 1, BigInt(0));
  for (int top = f.degree(); top >= dg; --top) {
    if (r[top] == 0)
      continue;
    if (!mpz_divisible_p(r[top].get_mpz_t(), g.leading().get_mpz_t()))
      throw invalid_input("exact_quotient: divisor does not divide dividend");
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), r[top].get_mpz_t(), g.leading().get_mpz_t());
    for (int j = 0; j <= dg; ++j)
      r[top - dg + j] -= qc * g.coeffs()[j];
    q[top - dg] = qc;
  }
  for (const auto &c : r)
    if (c != 0)
      throw invalid_input("exact_quotient: divisor does not divide dividend");
  return IntPoly(std::move(q));
}

IntPoly poly_gcd(const IntPoly &f, const IntPoly &g)
{
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  if (a.degree() < b.degree())
    std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(sign_preserving_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string to_string(const IntPoly &f)
{
  if (f.is_zero())
    return "0";
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    BigInt const &c = f.coeffs()[i];
    if (c == 0)
      continue;
    BigInt mag = abs(c);
    if (!out.empty())
      out += c < 0 ? "-" : "+";
    else if (c < 0)
      out += "-";
    if (i == 0 || mag != 1)
      out += mag.get_str();
    if (i >= 1)
      out += "t";
    if (i >= 2)
      out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly from_counts(const std::vector<std::uint64_t> &counts)
{
  std::vector<BigInt> v;
  v.reserve(counts.size());
  for (auto c : counts) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, -1, sizeof(c), 0, 0, &c);
    v.push_back(b);
  }
  return IntPoly(std::move(v));
}

} // namespace permlab
