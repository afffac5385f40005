#include <doctest.h>

#include <stdexcept>

#include "permlab/bijections.hpp"
#include "permlab/error.hpp"
#include "permlab/kernels.hpp"
#include "permlab/statistics.hpp"

using namespace permlab;
using namespace permlab::kernels;

TEST_CASE("serial and parallel histograms agree")
{
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      if (n == 5 && d == 3)
        continue;
      auto const spec = GroupSpec::unsigned_colors(n, d);
      auto const o = random_order(n, d, n * 10 + d);
      StatFn const f = [&](const ColoredPerm &p) { return lexc(p, o); };
      auto const h = histogram_serial(spec, f);
      REQUIRE(h == histogram_parallel(spec, f));
      std::uint64_t total = 0;
      for (auto c : h)
        total += c;
      REQUIRE(total == group_order(spec));
      REQUIRE(class_histograms_serial(spec, f) == class_histograms_parallel(spec, f));
      REQUIRE(class_histograms_serial(spec, f).size() == first_letters(spec).size());
    }
  auto const b = GroupSpec::signed_colors(4, 1);
  StatFn const f = [](const ColoredPerm &p) { return des_b(p); };
  CHECK(histogram_serial(b, f) == histogram_parallel(b, f));
  CHECK(histogram_serial(b, f) == Histogram{1, 76, 230, 76, 1});
}

TEST_CASE("scans report the first failure")
{
  auto const spec = GroupSpec::unsigned_colors(4, 2);
  auto const o = color_major_order(4, 2);
  Predicate const never = [&](const ColoredPerm &p) { return ldes(p, o) < 2; };
  auto const s = scan_serial(spec, never);
  auto const t = scan_parallel(spec, never);
  REQUIRE(s.first_failure.has_value());
  CHECK(s.first_failure == t.first_failure);
  CHECK(s.examined == group_order(spec));
  CHECK(t.examined == group_order(spec));
  CHECK(ldes(*s.first_failure, o) >= 2);
  // nothing earlier fails
  for (const auto &p : enumerate(spec)) {
    if (p == *s.first_failure)
      break;
    REQUIRE(ldes(p, o) < 2);
  }

  Predicate const always = [](const ColoredPerm &) { return true; };
  CHECK_FALSE(scan_parallel(spec, always).first_failure.has_value());
}

TEST_CASE("collision search")
{
  auto const spec = GroupSpec::unsigned_colors(4, 2);
  CHECK_FALSE(find_collision_serial(spec, gamma_min_one).has_value());
  CHECK_FALSE(find_collision_parallel(spec, gamma_min_one).has_value());

  // forget the color of the last letter: collisions everywhere
  Map const lossy = [](const ColoredPerm &p) {
    std::vector<int> v, c;
    for (int i = 0; i < p.size(); ++i) {
      v.push_back(p.value(i));
      c.push_back(i + 1 == p.size() ? 0 : p.color(i));
    }
    return make_perm(v, c, p.spec());
  };
  auto const a = find_collision_serial(spec, lossy);
  auto const b = find_collision_parallel(spec, lossy);
  REQUIRE(a.has_value());
  CHECK(a == b);
  CHECK(a->first != a->second);
  CHECK(lossy(a->first) == lossy(a->second));
}

TEST_CASE("exceptions cross the parallel region")
{
  auto const spec = GroupSpec::unsigned_colors(4, 1);
  StatFn const bad = [](const ColoredPerm &p) -> int {
    if (p.value(0) == 3)
      throw invalid_input("boom");
    return 0;
  };
  CHECK_THROWS_AS(histogram_parallel(spec, bad), invalid_input);
  CHECK_THROWS_AS(histogram_serial(spec, bad), invalid_input);
  CHECK_THROWS_AS(histogram_parallel(GroupSpec::unsigned_colors(12, 1), bad, 1000), size_limit_exceeded);
  CHECK(thread_count() >= 1);
}
