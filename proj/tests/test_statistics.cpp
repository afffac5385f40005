#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permlab/error.hpp"
#include "permlab/statistics.hpp"

using namespace permlab;

namespace
{

ColoredPerm example_p()
{
  return make_perm({2, 4, 1, 5, 6, 3}, {0, 1, 3, 3, 0, 2}, GroupSpec::unsigned_colors(6, 4));
}

ColoredPerm from_signed(const oracle::Word &w, int d = 1)
{
  std::vector<int> values, colors;
  for (int x : w) {
    values.push_back(std::abs(x));
    colors.push_back(x < 0 ? -1 : 1);
  }
  return make_perm(values, colors, GroupSpec::signed_colors(static_cast<int>(w.size()), d));
}

ColoredPerm from_plain(const oracle::Word &w)
{
  return make_perm(w, std::vector<int>(w.size(), 0), GroupSpec::unsigned_colors(static_cast<int>(w.size()), 1));
}

} // namespace

TEST_CASE("worked example")
{
  auto const p = example_p();
  auto const cm = color_major_order(6, 4);
  CHECK(ldes(p, cm) == 1);
  CHECK(lexc(p, cm) == 4);
  std::vector<int> pos;
  CHECK(evaluate(StatName::ldes, p, &cm, &pos) == 1);
  CHECK(pos == std::vector<int>{4});
}

TEST_CASE("identity has no descents or excedances")
{
  for (int d = 1; d <= 3; ++d) {
    auto const spec = GroupSpec::unsigned_colors(4, d);
    auto const id = ColoredPerm::identity(spec);
    for (const auto &o : {color_major_order(4, d), min_one_order(4, d), random_order(4, d, 3)}) {
      CHECK(ldes(id, o) + lasc(id, o) == 3);
      CHECK(lexc(id, o) == 0);
    }
    CHECK(ldes(id, color_major_order(4, d)) == 0);
    CHECK(ldes(id, min_one_order(4, d)) == 0);
    CHECK(lasc(id, color_major_order(4, d)) == 3);
  }
  auto const sid = ColoredPerm::identity(GroupSpec::signed_colors(4, 2));
  CHECK(ldes(sid, symmetric_order(4, 2)) == 0);
  CHECK(bexc(sid) == 0);
}

TEST_CASE("signed examples")
{
  CHECK(des_b(from_signed({-1, -2})) == 2);
  CHECK(ldes(from_signed({-1, -2}), symmetric_order(2, 1)) == 2);
  CHECK(des_b(from_signed({1, -2})) == 1);
  CHECK(bexc(from_signed({-1, 2})) == 1);
  CHECK(bexc(from_signed({2, 1})) == 1);
  CHECK(exc_b(from_signed({2, 1})) == 1);
  CHECK(asc_b(from_signed({-1, -2})) == 0);

  std::vector<int> pos;
  auto const w = from_signed({-1, 2});
  CHECK(evaluate(StatName::bexc, w, nullptr, &pos) == 1);
  CHECK(pos == std::vector<int>{1});
  pos.clear();
  CHECK(evaluate(StatName::des_b, from_signed({-1, -2}), nullptr, &pos) == 2);
  CHECK(pos == std::vector<int>{0, 1});

  std::vector<std::uint64_t> dist_des(3, 0), dist_exc(3, 0);
  for (const auto &p : enumerate(GroupSpec::signed_colors(2, 1))) {
    ++dist_des[des_b(p)];
    ++dist_exc[bexc(p)];
  }
  CHECK(dist_des == std::vector<std::uint64_t>{1, 6, 1});
  CHECK(dist_exc == std::vector<std::uint64_t>{1, 6, 1});
}

TEST_CASE("classical statistics")
{
  CHECK(des(from_plain({2, 1})) == 1);
  CHECK(exc(from_plain({2, 1})) == 1);
  auto const cm = color_major_order(4, 1);
  auto const mo = min_one_order(4, 1);
  for (const auto &w : oracle::all_perms(4)) {
    auto const p = from_plain(w);
    REQUIRE(des(p) == oracle::des(w));
    REQUIRE(exc(p) == oracle::exc(w));
    REQUIRE(lexc(p, cm) == oracle::exc(w));
    REQUIRE(lexc(p, mo) == oracle::exc(w));
    REQUIRE(ldes(p, cm) == oracle::des(w));
    REQUIRE(ldes(p, mo) == oracle::des(w));
  }
}

TEST_CASE("type B statistics against the integer oracle")
{
  for (int n = 1; n <= 4; ++n) {
    auto const sym = symmetric_order(n, 1);
    for (const auto &w : oracle::all_signed_perms(n)) {
      auto const p = from_signed(w);
      REQUIRE(des_b(p) == oracle::des_b(w));
      REQUIRE(ldes(p, sym) == oracle::des_b(w));
      REQUIRE(asc_b(p) == n - oracle::des_b(w));
      REQUIRE(bexc(p) == oracle::brenti_exc(w));
      REQUIRE(bexc(p, sym) == bexc(p));
      REQUIRE(ldes(p, sym) + lasc(p, sym) == n);
    }
  }
}

TEST_CASE("ldes + lasc and reversal, all orders sampled")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int const n = 1 + static_cast<int>(rng() % 4);
    int const d = 1 + static_cast<int>(rng() % 3);
    auto const order = random_order(n, d, rng());
    for (const auto &p : enumerate(GroupSpec::unsigned_colors(n, d))) {
      REQUIRE(ldes(p, order) + lasc(p, order) == n - 1);
      REQUIRE(lasc(p, order) == ldes(reverse(p), order));
    }
  }
  for (int d = 1; d <= 2; ++d) {
    auto const sym = symmetric_order(3, d);
    for (const auto &p : enumerate(GroupSpec::signed_colors(3, d)))
      REQUIRE(ldes(p, sym) + lasc(p, sym) == 3);
  }
}

TEST_CASE("equidistribution of ldes and lexc")
{
  for (int n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto const order = random_order(n, d, seed);
        std::vector<int> a(n + 1, 0), b(n + 1, 0);
        for (const auto &p : enumerate(GroupSpec::unsigned_colors(n, d))) {
          ++a[ldes(p, order)];
          ++b[lexc(p, order)];
        }
        REQUIRE(a == b);
      }
    }
  }
}

TEST_CASE("names and compatibility")
{
  for (auto s : {StatName::ldes, StatName::lasc, StatName::lexc, StatName::bexc, StatName::des,
                 StatName::exc, StatName::des_b, StatName::exc_b, StatName::asc_b})
    CHECK(parse_stat(to_string(s)) == s);
  CHECK_THROWS_AS(parse_stat("inv"), invalid_input);

  auto const u2 = GroupSpec::unsigned_colors(3, 2);
  auto const b = GroupSpec::signed_colors(3, 1);
  CHECK_THROWS_AS(require_compatible(StatName::des, u2), unsupported_operation);
  CHECK_THROWS_AS(require_compatible(StatName::bexc, u2), unsupported_operation);
  CHECK_THROWS_AS(require_compatible(StatName::lexc, b), unsupported_operation);
  CHECK_THROWS_AS(require_compatible(StatName::des_b, GroupSpec::signed_colors(3, 2)), unsupported_operation);
  CHECK_NOTHROW(require_compatible(StatName::ldes, b));
  CHECK_NOTHROW(require_compatible(StatName::exc_b, b));

  auto const p = ColoredPerm::identity(u2);
  CHECK_THROWS_AS(lexc(p, color_major_order(3, 1)), invalid_input);
  CHECK_THROWS_AS(evaluate(StatName::ldes, p), invalid_input);
  CHECK_THROWS_AS(bexc(p), unsupported_operation);
}
