#include <doctest.h>

#include <set>
#include <sstream>

#include "permlab/carlitz.hpp"
#include "permlab/error.hpp"
#include "permlab/harness.hpp"

using namespace permlab;
using namespace permlab::harness;

TEST_CASE("registry")
{
  auto const checks = list_checks();
  CHECK(checks.size() >= 14);
  std::set<std::string> ids;
  for (const auto &c : checks) {
    CHECK_FALSE(c.summary.empty());
    ids.insert(c.id);
  }
  CHECK(ids.size() == checks.size());
  for (const char *id : {"thm1.1-conger", "cor1.2-first-letter", "thm1.3-equidistribution",
                         "thm1.4-min-one", "thm1.5-symmetric", "cor1.6-typeb", "lemma-drop-first",
                         "prop-palindromic", "thm1.7-gamma-a", "thm1.8-gamma-b", "thm1.9-real-rooted",
                         "thm1.10-carlitz", "table-n6"})
    CHECK(ids.count(id) == 1);

  CHECK(default_check("thm1.10-carlitz").params.at("k") == 20);
  CHECK_THROWS_AS(default_check("nope"), invalid_input);
}

TEST_CASE("every check passes at small sizes")
{
  for (auto spec : list_checks()) {
    for (auto &[key, value] : spec.params)
      if (key == "n")
        value = std::min<std::int64_t>(value, 4);
    auto const r = run_check(spec);
    INFO(spec.id);
    CHECK(r.pass);
    CHECK(r.counterexample.is_null());
    CHECK(r.examined > 0);
  }
}

TEST_CASE("parameter validation")
{
  CheckSpec s;
  s.id = "thm1.1-conger";
  auto const r = run_check(s);
  CHECK(r.params.at("n") == 8);
  CHECK(r.pass);

  s.params["q"] = 3;
  CHECK_THROWS_AS(run_check(s), invalid_input);
  s.params.clear();
  s.params["n"] = 0;
  CHECK_THROWS_AS(run_check(s), invalid_input);
  s.id = "unknown";
  s.params.clear();
  CHECK_THROWS_AS(run_check(s), invalid_input);

  CheckSpec big = default_check("thm1.3-equidistribution");
  big.params["n"] = 8;
  big.params["d"] = 4;
  big.cap = 1000;
  CHECK_THROWS_AS(run_check(big), size_limit_exceeded);
}

TEST_CASE("strict mode reports recomputable counterexamples")
{
  CheckSpec s = default_check("thm1.10-carlitz");
  s.params["n"] = 4;
  s.params["k"] = 6;
  s.strict_paper = true;
  auto const r = run_check(s);
  REQUIRE_FALSE(r.pass);
  auto const &cx = r.counterexample;
  int const n = cx.at("n");
  int const i = cx.at("i");
  int const c = cx.at("coefficient");
  CHECK(i == 1);
  CHECK(c == 0);
  auto const lhs = carlitz_lhs(n, i, 6);
  auto const rhs = carlitz_rhs(n, i, 6, CarlitzForm::printed);
  CHECK(lhs[c] != rhs[c]);
  CHECK(cx.at("lhs") == 1);
  CHECK(cx.at("rhs") == 0);
  CHECK(r.detail.rfind("4 mismatching", 0) == 0);

  auto const j = to_json(r);
  CHECK(j.at("status") == "fail");
  CHECK(j.at("strict_paper") == true);

  CheckSpec t = default_check("thm1.5-symmetric");
  t.strict_paper = true;
  CHECK_FALSE(run_check(t).pass);
  CheckSpec u = default_check("cor1.6-typeb");
  u.strict_paper = true;
  auto const ur = run_check(u);
  CHECK_FALSE(ur.pass);
  CHECK(ur.counterexample.at("n") == 1);
}

TEST_CASE("reports serialize")
{
  auto const r = run_check(default_check("prop-palindromic"));
  auto const line = to_tsv(r);
  CHECK(line.rfind("prop-palindromic\tn=12\tpass\t", 0) == 0);
  CHECK(line.substr(line.size() - 2) == "\t-");
  CHECK(tsv_header().rfind("check\t", 0) == 0);
  auto const j = to_json(r);
  CHECK(j.at("counterexample").is_null());
  CHECK(j.at("params").at("n") == 12);
}

TEST_CASE("tables")
{
  auto const rows = table_rows(TableFamily::A, 6);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1].label == "2");
  CHECK(rows[1].poly == IntPoly{0, 16, 66, 36, 2});

  auto const b = table_rows(TableFamily::B, 2);
  REQUIRE(b.size() == 4);
  CHECK(b[0].label == "1");
  CHECK(b[1].label == "-1");
  CHECK(b[1].poly == IntPoly{0, 1, 1});

  auto const be = table_rows(TableFamily::BE, 3);
  CHECK(be[2].poly == IntPoly{0, 2, 6});

  auto const colored = table_rows(TableFamily::colored_ldes, 2, 2, "min-one");
  CHECK(colored.size() == 4);
  CHECK(colored[0].label == "1_0");

  std::istringstream tsv(emit_table(TableFamily::AExc, 3, 1, Format::tsv));
  std::string line;
  std::getline(tsv, line);
  CHECK(line == "class\tpoly\tcoeffs");
  int count = 0;
  while (std::getline(tsv, line))
    if (!line.empty())
      ++count;
  CHECK(count == 3);

  auto const j = nlohmann::json::parse(emit_table(TableFamily::A, 3, 1, Format::json));
  CHECK(j.at("family") == "A");
  CHECK(j.at("rows").size() == 3);
  CHECK(j.at("rows")[0].at("coeffs") == nlohmann::json::array({1, 1}));

  CHECK(parse_family("colored-lexc") == TableFamily::colored_lexc);
  CHECK_THROWS_AS(parse_family("C"), invalid_input);
  CHECK_THROWS_AS(parse_format("xml"), invalid_input);

  BigInt huge = 1;
  for (int i = 0; i < 30; ++i)
    huge *= 10;
  CHECK(to_json(huge).is_string());
  CHECK(to_json(BigInt(42)) == 42);
}
