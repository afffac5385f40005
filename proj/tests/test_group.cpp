#include <doctest.h>

#include <cstdlib>
#include <set>

#include "permlab/error.hpp"
#include "permlab/group.hpp"

using namespace permlab;

namespace
{

const GroupSpec u4 = GroupSpec::unsigned_colors(6, 4);

ColoredPerm example_p()
{
  return make_perm({2, 4, 1, 5, 6, 3}, {0, 1, 3, 3, 0, 2}, u4);
}

} // namespace

TEST_CASE("group specs")
{
  CHECK_THROWS_AS(GroupSpec::unsigned_colors(0, 1), invalid_input);
  CHECK_THROWS_AS(GroupSpec::signed_colors(2, 0), invalid_input);

  auto const s = GroupSpec::signed_colors(3, 2);
  CHECK(s.color_count() == 4);
  CHECK(s.colors() == std::vector<int>{-2, -1, 1, 2});
  CHECK_FALSE(s.has_color(0));
  CHECK(group_order(s) == 384);
  CHECK(group_order(GroupSpec::signed_colors(3, 3)) == 1296);
  CHECK(group_order(GroupSpec::unsigned_colors(5, 4)) == 122880);
  CHECK(group_order(GroupSpec::signed_colors(7, 1)) == 645120);
  CHECK(class_order(GroupSpec::unsigned_colors(6, 1)) == 120);
}

TEST_CASE("make_perm validates")
{
  auto const p = example_p();
  CHECK(to_string(p) == "2_0 4_1 1_3 5_3 6_0 3_2");
  CHECK(make_perm({1}, {0}, GroupSpec::unsigned_colors(1, 1)) == ColoredPerm::identity(GroupSpec::unsigned_colors(1, 1)));

  auto const s2 = GroupSpec::signed_colors(2, 2);
  auto const q = make_perm({1, 2}, {1, -2}, s2);
  CHECK(q.color(1) == -2);

  CHECK_THROWS_AS(make_perm({1, 1, 3}, {0, 0, 0}, GroupSpec::unsigned_colors(3, 1)), invalid_input);
  CHECK_THROWS_AS(make_perm({1, 2}, {0, 2}, GroupSpec::unsigned_colors(2, 2)), invalid_input);
  CHECK_THROWS_AS(make_perm({1, 2}, {0}, GroupSpec::unsigned_colors(2, 2)), invalid_input);
  CHECK_THROWS_AS(make_perm({1, 2}, {0, 1}, s2), invalid_input);
  CHECK_THROWS_AS(make_perm({1, 2, 3}, {0, 0, 0}, GroupSpec::unsigned_colors(2, 1)), invalid_input);
}

TEST_CASE("enumerate sizes and order")
{
  int count = 0;
  for (const auto &p : enumerate(GroupSpec::unsigned_colors(2, 1))) {
    (void)p;
    ++count;
  }
  CHECK(count == 2);

  for (auto spec : {GroupSpec::unsigned_colors(2, 2), GroupSpec::signed_colors(2, 1),
                    GroupSpec::unsigned_colors(3, 3), GroupSpec::signed_colors(3, 2)}) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::optional<ColoredPerm> prev;
    std::uint64_t idx = 0;
    for (const auto &p : enumerate(spec)) {
      seen.insert({{p.values().begin(), p.values().end()}, {p.colors().begin(), p.colors().end()}});
      if (prev)
        CHECK(*prev < p);
      CHECK(rank(p) == idx);
      CHECK(unrank(spec, idx) == p);
      prev = p;
      ++idx;
    }
    CHECK(seen.size() == group_order(spec));
    CHECK(idx == group_order(spec));
  }
}

TEST_CASE("first-letter classes")
{
  auto const u22 = GroupSpec::unsigned_colors(2, 2);
  int n = 0;
  for (const auto &p : first_letter_class(u22, {1, 0})) {
    CHECK(p.letter(0) == Letter{1, 0});
    ++n;
  }
  CHECK(n == 2);

  n = 0;
  for (const auto &p : first_letter_class(GroupSpec::unsigned_colors(6, 1), {1, 0})) {
    (void)p;
    ++n;
  }
  CHECK(n == 120);

  std::vector<ColoredPerm> got;
  for (const auto &p : first_letter_class(GroupSpec::signed_colors(2, 1), {2, 1}))
    got.push_back(p);
  REQUIRE(got.size() == 2);
  CHECK(got[0].letter(1) == Letter{1, -1});
  CHECK(got[1].letter(1) == Letter{1, 1});

  // class sizes are equal and add up to the group
  auto const spec = GroupSpec::signed_colors(3, 2);
  std::uint64_t total = 0;
  for (Letter l : first_letters(spec)) {
    std::uint64_t c = 0;
    for (const auto &p : first_letter_class(spec, l)) {
      CHECK(p.letter(0) == l);
      ++c;
    }
    CHECK(c == class_order(spec));
    total += c;
  }
  CHECK(total == group_order(spec));

  CHECK_THROWS_AS(first_letter_class(u22, {3, 0}), invalid_input);
  CHECK_THROWS_AS(first_letter_class(u22, {1, 2}), invalid_input);
}

TEST_CASE("enumeration cap")
{
  CHECK_THROWS_AS(enumerate(GroupSpec::unsigned_colors(5, 2), 100), size_limit_exceeded);
  CHECK_NOTHROW(enumerate(GroupSpec::unsigned_colors(5, 2), 3840));
  CHECK_THROWS_AS(enumerate(GroupSpec::signed_colors(20, 3)), size_limit_exceeded);

  ::setenv("PERMLAB_MAX_ELEMENTS", "10", 1);
  CHECK(default_element_cap() == 10);
  CHECK_THROWS_AS(enumerate(GroupSpec::unsigned_colors(4, 1)), size_limit_exceeded);
  ::unsetenv("PERMLAB_MAX_ELEMENTS");
  CHECK(default_element_cap() == 100000000ULL);
}

TEST_CASE("cycle decomposition uses word colors")
{
  auto const cf = cycle_decomposition(example_p());
  CHECK(to_string(cf) == "(1_3 2_0 4_1 5_3 6_0 3_2)");
  CHECK(from_cycle_form(cf) == example_p());

  auto const u22 = GroupSpec::unsigned_colors(2, 2);
  auto const id = make_perm({1, 2}, {0, 1}, u22);
  CHECK(to_string(cycle_decomposition(id)) == "(1_0)(2_1)");

  auto const swap = make_perm({2, 1}, {0, 1}, u22);
  auto const sc = cycle_decomposition(swap);
  REQUIRE(sc.cycles.size() == 1);
  CHECK(sc.cycles[0] == std::vector<Letter>{{1, 1}, {2, 0}});

  CycleForm trivial{GroupSpec::unsigned_colors(2, 1), {{{1, 0}}, {{2, 0}}}};
  CHECK(from_cycle_form(trivial) == ColoredPerm::identity(GroupSpec::unsigned_colors(2, 1)));

  // rotations and cycle order do not matter
  CycleForm rotated{u4, {{{5, 3}, {6, 0}, {3, 2}, {1, 3}, {2, 0}, {4, 1}}}};
  CHECK(from_cycle_form(rotated) == example_p());

  CycleForm bad{GroupSpec::unsigned_colors(3, 1), {{{1, 0}, {2, 0}}, {{2, 0}}}};
  CHECK_THROWS_AS(from_cycle_form(bad), invalid_input);
  CycleForm missing{GroupSpec::unsigned_colors(3, 1), {{{1, 0}, {2, 0}}}};
  CHECK_THROWS_AS(from_cycle_form(missing), invalid_input);
}

TEST_CASE("cycle round trip, exhaustive")
{
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 3; ++d) {
      auto const spec = GroupSpec::unsigned_colors(n, d);
      for (const auto &p : enumerate(spec)) {
        auto const cf = cycle_decomposition(p);
        // consecutive entries are (pi_i, c_i) -> (pi_{pi_i}, c_{pi_i})
        for (const auto &c : cf.cycles) {
          for (std::size_t k = 0; k < c.size(); ++k) {
            Letter const a = c[k], b = c[(k + 1) % c.size()];
            REQUIRE(p.letter(a.value - 1) == b);
          }
        }
        std::multiset<std::pair<int, int>> letters, cyc;
        for (int i = 0; i < n; ++i)
          letters.insert({p.value(i), p.color(i)});
        for (const auto &c : cf.cycles)
          for (Letter l : c)
            cyc.insert({l.value, l.color});
        REQUIRE(letters == cyc);
        REQUIRE(from_cycle_form(cf) == p);
      }
    }
  }
  for (const auto &p : enumerate(GroupSpec::signed_colors(3, 2)))
    REQUIRE(from_cycle_form(cycle_decomposition(p)) == p);
}

TEST_CASE("reverse")
{
  auto const r = reverse(example_p());
  CHECK(to_string(r) == "3_2 6_0 5_3 1_3 4_1 2_0");
  for (const auto &p : enumerate(GroupSpec::unsigned_colors(3, 2)))
    REQUIRE(reverse(reverse(p)) == p);
  CHECK_THROWS_AS(reverse(ColoredPerm::identity(GroupSpec::signed_colors(2, 1))), unsupported_operation);
}
