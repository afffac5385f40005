#include "permlab/sturm.hpp"

#include "permlab/error.hpp"

namespace permlab
{

namespace
{

int sign_at_infinity(const IntPoly &p, bool positive)
{
  int const s = sgn(p.leading());
  if (positive || p.degree() % 2 == 0)
    return s;
  return -s;
}

int variations(const std::vector<IntPoly> &chain, bool positive)
{
  int count = 0;
  int prev = 0;
  for (const auto &p : chain) {
    int const s = sign_at_infinity(p, positive);
    if (s == 0)
      continue;
    if (prev != 0 && s != prev)
      ++count;
    prev = s;
  }
  return count;
}

} // namespace

std::vector<IntPoly> sturm_chain(const IntPoly &f)
{
  if (f.is_zero())
    throw invalid_input("Sturm chain of the zero polynomial");
  std::vector<IntPoly> chain;
  // positive rescaling keeps every sign pattern intact
  chain.push_back(primitive_part(f) * BigInt(sgn(f.leading())));
  IntPoly d = derivative(f);
  if (d.is_zero())
    return chain;
  chain.push_back(primitive_part(d) * BigInt(sgn(d.leading())));
  while (true) {
    IntPoly const &a = chain[chain.size() - 2];
    IntPoly const &b = chain.back();
    IntPoly r = -sign_preserving_prem(a, b);
    if (r.is_zero())
      break;
    BigInt const c = content(r);
    std::vector<BigInt> v = r.coeffs();
    for (auto &x : v)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    chain.emplace_back(std::move(v));
  }
  return chain;
}

int count_distinct_real_roots(const IntPoly &f)
{
  auto const chain = sturm_chain(f);
  return variations(chain, false) - variations(chain, true);
}

IntPoly square_free_part(const IntPoly &f)
{
  if (f.is_zero())
    throw invalid_input("square-free part of the zero polynomial");
  IntPoly const g = poly_gcd(f, derivative(f));
  return primitive_part(exact_quotient(primitive_part(f), g));
}

bool is_real_rooted(const IntPoly &f)
{
  if (f.is_zero())
    throw invalid_input("real-rootedness of the zero polynomial is undefined");
  int const low = f.low_degree();
  std::vector<BigInt> stripped(f.coeffs().begin() + low, f.coeffs().end());
  IntPoly const core(std::move(stripped));
  if (core.degree() == 0)
    return true;
  IntPoly const sf = square_free_part(core);
  return count_distinct_real_roots(sf) == sf.degree();
}

} // namespace permlab
