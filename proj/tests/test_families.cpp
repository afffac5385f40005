#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "permlab/carlitz.hpp"
#include "permlab/distribution.hpp"
#include "permlab/error.hpp"
#include "permlab/families.hpp"
#include "permlab/gamma.hpp"
#include "permlab/sturm.hpp"

using namespace permlab;

namespace
{

IntPoly counts_poly(const std::vector<std::uint64_t> &c)
{
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

// B_{n,k} from the integer oracle, keyed by signed first letter.
std::map<int, IntPoly> oracle_b(int n)
{
  auto const words = oracle::all_signed_perms(n);
  std::map<int, IntPoly> out;
  for (int k = -n; k <= n; ++k)
    if (k != 0)
      out[k] = counts_poly(oracle::restricted_counts(words, k, oracle::des_b));
  return out;
}

std::map<int, IntPoly> oracle_be(int n)
{
  auto const words = oracle::all_signed_perms(n);
  std::map<int, IntPoly> out;
  for (int k = -n; k <= n; ++k)
    if (k != 0)
      out[k] = counts_poly(oracle::restricted_counts(words, k, oracle::brenti_exc));
  return out;
}

std::vector<IntPoly> oracle_a(int n)
{
  auto const words = oracle::all_perms(n);
  std::vector<IntPoly> out;
  for (int j = 1; j <= n; ++j)
    out.push_back(counts_poly(oracle::restricted_counts(words, j, oracle::des)));
  return out;
}

} // namespace

TEST_CASE("Eulerian polynomials")
{
  CHECK(eulerian_a(0) == IntPoly{1});
  CHECK(eulerian_a(1) == IntPoly{1});
  CHECK(eulerian_a(2) == IntPoly{1, 1});
  CHECK(eulerian_a(5) == IntPoly{1, 26, 66, 26, 1});
  for (int n = 1; n <= 8; ++n) {
    auto const words = oracle::all_perms(n);
    std::vector<std::uint64_t> h(n, 0);
    for (const auto &w : words)
      ++h[oracle::des(w)];
    REQUIRE(eulerian_a(n) == counts_poly(h));
    REQUIRE(eulerian_a(n) ==
            stat_polynomial(GroupSpec::unsigned_colors(n, 1), StatName::des));
  }
  CHECK(eulerian_number(6, 2) == 302);
  CHECK(eulerian_number(6, 7) == 0);

  // rows of the restricted table add up to A_6
  IntPoly sum;
  for (const auto &a : oracle_a(6))
    sum += a;
  CHECK(sum == eulerian_a(6));
}

TEST_CASE("Conger counts")
{
  CHECK(conger_count(6, 1, 2) == 16);
  CHECK(conger_count(2, 0, 1) == 1);
  CHECK(conger_count(6, 4, 6) == 26);
  CHECK_THROWS_AS(conger_count(3, 0, 4), invalid_input);
  CHECK_THROWS_AS(conger_count(3, 3, 1), invalid_input);
  CHECK_THROWS_AS(conger_count(0, 0, 1), invalid_input);
  for (int n = 1; n <= 7; ++n) {
    auto const a = oracle_a(n);
    for (int j = 1; j <= n; ++j)
      for (int dsc = 0; dsc < n; ++dsc)
        REQUIRE(conger_count(n, dsc, j) == a[j - 1].coeff(dsc));
  }
}

TEST_CASE("restricted polynomials by enumeration")
{
  auto const u6 = GroupSpec::unsigned_colors(6, 1);
  CHECK(stat_polynomial(u6, StatName::des, nullptr, Letter{2, 0}) == IntPoly{0, 16, 66, 36, 2});
  CHECK(stat_polynomial(u6, StatName::exc, nullptr, Letter{6, 0}) == IntPoly{0, 16, 66, 36, 2});
  auto const b2 = GroupSpec::signed_colors(2, 1);
  CHECK(stat_polynomial(b2, StatName::des_b, nullptr, Letter{1, 1}) == IntPoly{1, 1});
  CHECK(stat_polynomial(b2, StatName::des_b) == IntPoly{1, 6, 1});
  CHECK(stat_polynomial(b2, StatName::bexc) == IntPoly{1, 6, 1});

  auto const cm = color_major_order(3, 2);
  auto const u32 = GroupSpec::unsigned_colors(3, 2);
  CHECK(stat_polynomial(u32, StatName::ldes, &cm) == stat_polynomial(u32, StatName::lexc, &cm));
  CHECK(stat_polynomial(u32, StatName::ldes, &cm).eval(BigInt(1)) == 48);

  CHECK_THROWS_AS(stat_polynomial(u32, StatName::ldes), invalid_input);
  CHECK_THROWS_AS(stat_polynomial(u32, StatName::des), unsupported_operation);
  auto const wrong = color_major_order(2, 2);
  CHECK_THROWS_AS(stat_polynomial(u32, StatName::ldes, &wrong), invalid_input);
  auto const big = color_major_order(9, 9);
  CHECK_THROWS_AS(stat_polynomial(GroupSpec::unsigned_colors(9, 9), StatName::ldes, &big),
                  size_limit_exceeded);
}

TEST_CASE("type B polynomial recurrence")
{
  CHECK(typeb_des_poly_rec(1, 1) == IntPoly{1});
  CHECK(typeb_des_poly_rec(1, -1) == IntPoly{0, 1});
  CHECK(typeb_des_poly_rec(2, 2) == IntPoly{0, 2});
  CHECK(typeb_des_poly_rec(2, 1) == IntPoly{1, 1});
  CHECK(typeb_des_poly_rec(2, -1) == IntPoly{0, 1, 1});
  CHECK(typeb_des_poly_rec(3, 1) == IntPoly{1, 6, 1});
  CHECK(typeb_des_poly_rec(3, -2) == IntPoly{0, 2, 6});
  CHECK_THROWS_AS(typeb_des_poly_rec(3, 0), invalid_input);
  CHECK_THROWS_AS(typeb_des_poly_rec(3, 4), invalid_input);

  for (int n = 1; n <= 6; ++n) {
    auto const b = oracle_b(n);
    for (const auto &[k, poly] : b)
      REQUIRE(typeb_des_poly_rec(n, k) == poly);
    if (n >= 2) {
      BigInt scale = 1;
      scale <<= static_cast<unsigned>(n - 1);
      IntPoly const boundary = (eulerian_a(n - 1) * scale).shifted(1);
      CHECK(b.at(n) == boundary);
      CHECK(b.at(-n) == boundary);
    }
  }

  // the t = 1 values are class sizes
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) {
      BigInt size = 1;
      for (int i = 1; i < n; ++i)
        size *= 2 * i;
      REQUIRE(typeb_des_poly_rec(n, k).eval(BigInt(1)) == size);
      REQUIRE(typeb_des_poly_rec(n, -k).eval(BigInt(1)) == size);
    }
}

TEST_CASE("type B coefficient recurrence")
{
  CHECK(typeb_count_rec(1, 1, -1) == 1);
  CHECK(typeb_count_rec(2, 1, 1) == 1);
  CHECK(typeb_count_rec(3, 0, 3) == 0);
  CHECK(typeb_count_rec(3, 0, -3) == 0);
  CHECK_THROWS_AS(typeb_count_rec(3, 0, 0), invalid_input);
  CHECK_THROWS_AS(typeb_count_rec(3, -1, 1), invalid_input);

  for (int n = 1; n <= 8; ++n)
    for (int k = -n; k <= n; ++k) {
      if (k == 0)
        continue;
      IntPoly const f = typeb_des_poly_rec(n, k);
      for (int dsc = 0; dsc <= n; ++dsc)
        REQUIRE(typeb_count_rec(n, dsc, k) == f.coeff(dsc));
    }
  for (int n = 1; n <= 5; ++n)
    for (const auto &[k, poly] : oracle_b(n))
      for (int dsc = 0; dsc <= n; ++dsc)
        REQUIRE(typeb_count_rec(n, dsc, k) == poly.coeff(dsc));
}

TEST_CASE("excedance classes against Brenti's definition")
{
  // BE_{n,k} from the integer oracle; class swap for |k| >= 2 only
  for (int n = 1; n <= 5; ++n) {
    auto const b = oracle_b(n);
    auto const be = oracle_be(n);
    for (int k = 1; k <= n; ++k) {
      if (k == 1) {
        REQUIRE(b.at(1) == be.at(1));
        REQUIRE(b.at(-1) == be.at(-1));
      } else {
        REQUIRE(b.at(k) == be.at(-k));
        REQUIRE(b.at(-k) == be.at(k));
      }
    }
  }
  auto const be3 = oracle_be(3);
  CHECK(be3.at(2) == IntPoly{0, 2, 6});
  CHECK(be3.at(-2) == IntPoly{0, 6, 2});
  // the literal swap fails already at n = 2
  CHECK(oracle_b(2).at(1) != oracle_be(2).at(-1));
}

TEST_CASE("first-letter deletion identity")
{
  CHECK(lemma_drop_rhs(2, 1) == IntPoly{1, 1});
  CHECK(lemma_drop_rhs(2, -1) == IntPoly{0, 1, 1});
  for (int n1 = 2; n1 <= 6; ++n1) {
    auto const lower = oracle_b(n1 - 1);
    auto const upper = oracle_b(n1);
    RestrictedFamily const level = [&](int i) { return lower.at(i); };
    for (const auto &[k, poly] : upper) {
      REQUIRE(lemma_drop_rhs(n1, k, level) == poly);
      REQUIRE(lemma_drop_rhs(n1, k) == poly);
    }
  }
  CHECK_THROWS_AS(lemma_drop_rhs(1, 1), invalid_input);
  CHECK_THROWS_AS(lemma_drop_rhs(3, 4), invalid_input);
}

TEST_CASE("symmetrized families")
{
  CHECK(symmetrized_bar(2, 1) == IntPoly{1, 2, 1});
  CHECK(symmetrized_tilde(2, 1) == IntPoly{0, 2, 2});
  CHECK(symmetrized_bar(2, 2) == IntPoly{0, 4});
  CHECK(symmetrized_tilde(2, 2) == IntPoly{0, 2, 2});
  CHECK(is_palindromic(symmetrized_tilde(3, 2), 4));
  CHECK_THROWS_AS(symmetrized_bar(2, 0), invalid_input);
  CHECK_THROWS_AS(symmetrized_bar(2, -1), invalid_input);

  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      auto const bar = symmetrized_bar(n, k);
      auto const tilde = symmetrized_tilde(n, k);
      REQUIRE(is_palindromic(bar, n));
      REQUIRE(is_palindromic(tilde, n + 1));
      REQUIRE(gamma_vector(bar, n).nonnegative());
      REQUIRE(gamma_vector(tilde, n + 1).nonnegative());
    }
}

TEST_CASE("real-rootedness of B_{n,k}")
{
  CHECK(is_real_rooted(typeb_des_poly_rec(6, 3)));
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      REQUIRE(is_real_rooted(typeb_des_poly_rec(n, k)));
      REQUIRE(is_real_rooted(typeb_des_poly_rec(n, -k)));
    }
}

TEST_CASE("Carlitz series")
{
  CHECK(carlitz_lhs(2, 1, 3).coeffs() == std::vector<BigInt>{1, 3, 5, 7});
  CHECK(carlitz_rhs(2, 1, 3).coeffs() == std::vector<BigInt>{1, 3, 5, 7});
  CHECK(carlitz_lhs(2, -1, 3).coeffs() == std::vector<BigInt>{0, 1, 3, 5});
  CHECK(carlitz_rhs(2, -1, 3).coeffs() == std::vector<BigInt>{0, 1, 3, 5});
  CHECK(carlitz_lhs(1, -1, 3).coeffs() == std::vector<BigInt>{0, 1, 1, 1});
  CHECK(carlitz_rhs(1, -1, 3).coeffs() == std::vector<BigInt>{0, 1, 1, 1});
  CHECK(carlitz_rhs(2, 1, 3, CarlitzForm::printed).coeffs() == std::vector<BigInt>{0, 3, 5, 7});
  CHECK_THROWS_AS(carlitz_rhs(2, 3, 3), invalid_input);
  CHECK_THROWS_AS(carlitz_lhs(2, 0, 3), invalid_input);

  // prefix-sum oracle on the enumerated polynomials
  int const K = 20;
  for (int n = 1; n <= 6; ++n) {
    for (const auto &[i, poly] : oracle_b(n)) {
      auto const want = oracle::divide_by_one_minus_t(poly.coeffs(), n, K);
      REQUIRE(carlitz_lhs(n, i, K).coeffs() == want);
      int const m = std::abs(i);
      std::vector<BigInt> closed(K + 1, 0);
      for (int k = 0; k <= K; ++k) {
        if (i > 0)
          closed[k] = oracle::ipow(2 * k + 1, n - m) * oracle::ipow(2 * k, m - 1);
        else if (k >= 1)
          closed[k] = oracle::ipow(2 * k - 1, n - m) * oracle::ipow(2 * k, m - 1);
      }
      REQUIRE(want == closed);
    }
  }

  // strict form differs only at i = 1, t^0
  for (int n = 1; n <= 10; ++n)
    for (int i = -n; i <= n; ++i) {
      if (i == 0)
        continue;
      auto const lhs = carlitz_lhs(n, i, K);
      auto const diff = first_difference(lhs, carlitz_rhs(n, i, K, CarlitzForm::printed));
      REQUIRE(first_difference(lhs, carlitz_rhs(n, i, K)) == std::nullopt);
      if (i == 1) {
        REQUIRE(diff == 0);
        auto rest = carlitz_rhs(n, i, K, CarlitzForm::printed).coeffs();
        rest[0] = 1;
        REQUIRE(rest == lhs.coeffs());
      } else {
        REQUIRE(diff == std::nullopt);
      }
    }
}

TEST_CASE("Brenti series")
{
  CHECK(brenti_lhs(1, 2).coeffs() == std::vector<BigInt>{1, 3, 5});
  CHECK(brenti_rhs(1, 2).coeffs() == std::vector<BigInt>{1, 3, 5});
  CHECK(brenti_lhs(2, 2).coeffs() == std::vector<BigInt>{1, 9, 25});
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(brenti_lhs(n, 20) == brenti_rhs(n, 20));
    // whole-group polynomial from the oracle
    std::vector<std::uint64_t> h(n + 1, 0);
    for (const auto &w : oracle::all_signed_perms(n))
      ++h[oracle::des_b(w)];
    REQUIRE(brenti_lhs(n, 20).coeffs() == oracle::divide_by_one_minus_t(counts_poly(h).coeffs(), n + 1, 20));
  }
  CHECK_THROWS_AS(brenti_lhs(0, 2), invalid_input);
}
