#include "permlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>

#include "permlab/bijections.hpp"
#include "permlab/carlitz.hpp"
#include "permlab/error.hpp"
#include "permlab/families.hpp"
#include "permlab/gamma.hpp"
#include "permlab/kernels.hpp"
#include "permlab/order.hpp"
#include "permlab/statistics.hpp"
#include "permlab/sturm.hpp"

namespace permlab::harness
{

using nlohmann::json;

json to_json(const BigInt &v)
{
  if (v.fits_slong_p())
    return json(v.get_si());
  return json(v.get_str());
}

json coeffs_json(const IntPoly &f)
{
  json out = json::array();
  for (const auto &c : f.coeffs())
    out.push_back(to_json(c));
  return out;
}

namespace
{

// ---------------------------------------------------------------- helpers

json perm_json(const ColoredPerm &p)
{
  return json{{"n", p.spec().n()},
              {"d", p.spec().d()},
              {"signed", p.spec().is_signed()},
              {"values", std::vector<int>(p.values().begin(), p.values().end())},
              {"colors", std::vector<int>(p.colors().begin(), p.colors().end())},
              {"word", to_string(p)}};
}

json poly_json(const IntPoly &f)
{
  return json{{"poly", to_string(f)}, {"coeffs", coeffs_json(f)}};
}

int signed_label(Letter l)
{
  return l.color < 0 ? -l.value : l.value;
}

Letter signed_letter(int k)
{
  return {std::abs(k), k < 0 ? -1 : 1};
}

// k = 1, -1, 2, -2, ..., n, -n
std::vector<int> signed_firsts(int n)
{
  std::vector<int> ks;
  for (int k = 1; k <= n; ++k) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

// Restricted polynomials of one statistic, aligned with first_letters(spec).
std::vector<IntPoly> class_polys(const GroupSpec &spec, const kernels::StatFn &stat, std::uint64_t cap)
{
  std::vector<IntPoly> out;
  for (const auto &h : kernels::class_histograms_parallel(spec, stat, cap))
    out.push_back(from_counts(h));
  return out;
}

// A_{n,j} or AExc_{n,j}, index j-1.
std::vector<IntPoly> type_a_polys(int n, bool excedances, std::uint64_t cap)
{
  auto const spec = GroupSpec::unsigned_colors(n, 1);
  if (excedances)
    return class_polys(spec, [](const ColoredPerm &p) { return exc(p); }, cap);
  return class_polys(spec, [](const ColoredPerm &p) { return des(p); }, cap);
}

// B_{n,k} or BE_{n,k} keyed by signed first letter k.
std::map<int, IntPoly> type_b_polys(int n, bool excedances, std::uint64_t cap)
{
  auto const spec = GroupSpec::signed_colors(n, 1);
  std::vector<IntPoly> polys =
    excedances ? class_polys(spec, [](const ColoredPerm &p) { return bexc(p); }, cap)
               : class_polys(spec, [](const ColoredPerm &p) { return des_b(p); }, cap);
  auto const firsts = first_letters(spec);
  std::map<int, IntPoly> out;
  for (std::size_t c = 0; c < firsts.size(); ++c)
    out[signed_label(firsts[c])] = std::move(polys[c]);
  return out;
}

json letter_json(Letter l)
{
  return json{{"value", l.value}, {"color", l.color}};
}

// ----------------------------------------------------------- check context

struct Context
{
  const CheckSpec &spec;
  IdentityReport &report;

  std::int64_t param(const char *key) const { return spec.params.at(key); }
  int ip(const char *key) const { return static_cast<int>(param(key)); }

  // Records the first failure only; later calls are ignored.
  void fail(json counterexample, std::string detail = {})
  {
    if (!report.pass)
      return;
    report.pass = false;
    report.counterexample = std::move(counterexample);
    if (!detail.empty())
      report.detail = std::move(detail);
  }
  bool failed() const { return !report.pass; }
};

using CheckFn = std::function<void(Context &)>;

struct ParamDef
{
  const char *key;
  std::int64_t def;
  std::int64_t min;
  std::int64_t max;
};

struct Entry
{
  const char *id;
  const char *summary;
  std::vector<ParamDef> params;
  CheckFn run;
};

// ------------------------------------------------------------------ checks

// Restricted descent and excedance polynomials over S_6, j = 1..6, lowest
// degree first.
const std::vector<std::vector<long>> frozen_a6 = {
  {1, 26, 66, 26, 1},  {0, 16, 66, 36, 2}, {0, 8, 60, 48, 4},
  {0, 4, 48, 60, 8},   {0, 2, 36, 66, 16}, {0, 1, 26, 66, 26, 1},
};
const std::vector<std::vector<long>> frozen_aexc6 = {
  {1, 26, 66, 26, 1},  {0, 1, 26, 66, 26, 1}, {0, 2, 36, 66, 16},
  {0, 4, 48, 60, 8},   {0, 8, 60, 48, 4},     {0, 16, 66, 36, 2},
};

IntPoly from_longs(const std::vector<long> &c)
{
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

void check_table_n6(Context &ctx)
{
  for (TableFamily fam : {TableFamily::A, TableFamily::AExc}) {
    auto const rows = table_rows(fam, 6, 1, "color-major", ctx.spec.cap);
    auto const &expected = fam == TableFamily::A ? frozen_a6 : frozen_aexc6;
    for (int j = 0; j < 6; ++j) {
      ++ctx.report.examined;
      IntPoly const want = from_longs(expected[j]);
      if (rows[j].poly != want) {
        ctx.fail({{"family", to_string(fam)}, {"n", 6}, {"j", j + 1},
                  {"expected", poly_json(want)}, {"enumerated", poly_json(rows[j].poly)}});
      }
    }
  }
}

void check_conger(Context &ctx)
{
  int const n = ctx.ip("n");
  for (int m = 1; m <= n; ++m) {
    auto const polys = type_a_polys(m, false, ctx.spec.cap);
    for (int j = 1; j <= m; ++j) {
      for (int dsc = 0; dsc < m; ++dsc) {
        ++ctx.report.examined;
        BigInt const formula = conger_count(m, dsc, j);
        BigInt const counted = polys[j - 1].coeff(dsc);
        if (formula != counted) {
          ctx.fail({{"n", m}, {"j", j}, {"dsc", dsc},
                    {"formula", to_json(formula)}, {"enumerated", to_json(counted)}});
        }
      }
    }
  }
}

void check_first_letter(Context &ctx)
{
  int const n = ctx.ip("n");
  for (int m = 2; m <= n; ++m) {
    auto const a = type_a_polys(m, false, ctx.spec.cap);
    auto const e = type_a_polys(m, true, ctx.spec.cap);
    IntPoly const whole = eulerian_a(m - 1);
    ++ctx.report.examined;
    if (a[0] != whole || e[0] != whole) {
      ctx.fail({{"n", m}, {"j", 1}, {"A", poly_json(a[0])}, {"AExc", poly_json(e[0])},
                {"A_prev", poly_json(whole)}});
    }
    for (int j = 2; j <= m; ++j) {
      ++ctx.report.examined;
      int const partner = m + 2 - j;
      if (a[j - 1] != e[partner - 1]) {
        ctx.fail({{"n", m}, {"j", j}, {"partner", partner}, {"A", poly_json(a[j - 1])},
                  {"AExc", poly_json(e[partner - 1])}});
      }
    }
  }
}

void check_equidistribution(Context &ctx)
{
  int const n = ctx.ip("n");
  int const d = ctx.ip("d");
  auto const seed = static_cast<std::uint64_t>(ctx.param("seed"));
  auto const trials = ctx.param("trials");
  auto const spec = GroupSpec::unsigned_colors(n, d);
  for (std::int64_t t = 0; t < trials && !ctx.failed(); ++t) {
    std::uint64_t const s = seed + static_cast<std::uint64_t>(t);
    LinearOrder const order = random_order(n, d, s);
    std::string const order_text = "random:" + std::to_string(s);

    auto const scan = kernels::scan_parallel(
      spec, [&](const ColoredPerm &p) { return ldes(phi(p, order), order) == lexc(p, order); },
      ctx.spec.cap);
    ctx.report.examined += scan.examined;
    if (scan.first_failure) {
      auto const &p = *scan.first_failure;
      auto const img = phi(p, order);
      ctx.fail({{"order", order_text}, {"perm", perm_json(p)}, {"image", perm_json(img)},
                {"ldes_image", ldes(img, order)}, {"lexc", lexc(p, order)}});
      break;
    }
    auto const clash = kernels::find_collision_parallel(
      spec, [&](const ColoredPerm &p) { return phi(p, order); }, ctx.spec.cap);
    if (clash) {
      ctx.fail({{"order", order_text}, {"perm", perm_json(clash->first)},
                {"other", perm_json(clash->second)}, {"image", perm_json(phi(clash->first, order))}},
               "map is not injective");
    }
  }
}

void check_min_one(Context &ctx)
{
  int const n_max = ctx.ip("n");
  int const d_max = ctx.ip("d");
  for (int n = 1; n <= n_max && !ctx.failed(); ++n) {
    for (int d = 1; d <= d_max && !ctx.failed(); ++d) {
      auto const spec = GroupSpec::unsigned_colors(n, d);
      LinearOrder const order = min_one_order(n, d);
      auto const scan = kernels::scan_parallel(
        spec,
        [&](const ColoredPerm &p) {
          ColoredPerm const img = gamma_min_one(p);
          return ldes(img, order) == lexc(p, order) &&
                 img.letter(0) == min_one_swap(p.letter(0), n, d);
        },
        ctx.spec.cap);
      ctx.report.examined += scan.examined;
      if (scan.first_failure) {
        auto const &p = *scan.first_failure;
        auto const img = gamma_min_one(p);
        ctx.fail({{"order", "min-one"}, {"perm", perm_json(p)}, {"image", perm_json(img)},
                  {"ldes_image", ldes(img, order)}, {"lexc", lexc(p, order)},
                  {"expected_first", letter_json(min_one_swap(p.letter(0), n, d))}});
        return;
      }
      auto const clash = kernels::find_collision_parallel(spec, gamma_min_one, ctx.spec.cap);
      if (clash) {
        ctx.fail({{"perm", perm_json(clash->first)}, {"other", perm_json(clash->second)},
                  {"image", perm_json(gamma_min_one(clash->first))}},
                 "map is not injective");
      }
    }
  }
}

Letter symmetric_class_image(Letter first, bool strict)
{
  if (first.value == 1 && !strict)
    return first;
  return negate_color(first);
}

void check_symmetric(Context &ctx)
{
  int const n_max = ctx.ip("n");
  int const d_max = ctx.ip("d");
  bool const strict = ctx.spec.strict_paper;
  for (int d = 1; d <= d_max && !ctx.failed(); ++d) {
    for (int n = 1; n <= n_max && !ctx.failed(); ++n) {
      auto const spec = GroupSpec::signed_colors(n, d);
      LinearOrder const order = symmetric_order(n, d);
      auto const scan = kernels::scan_parallel(
        spec,
        [&](const ColoredPerm &p) {
          ColoredPerm const img = gamma_symmetric(p);
          return ldes(img, order) == bexc(p) &&
                 img.letter(0) == symmetric_class_image(p.letter(0), strict);
        },
        ctx.spec.cap);
      ctx.report.examined += scan.examined;
      if (scan.first_failure) {
        auto const &p = *scan.first_failure;
        auto const img = gamma_symmetric(p);
        ctx.fail({{"order", "symmetric"}, {"perm", perm_json(p)}, {"image", perm_json(img)},
                  {"ldes_image", ldes(img, order)}, {"bexc", bexc(p)},
                  {"expected_first", letter_json(symmetric_class_image(p.letter(0), strict))}});
        return;
      }
      auto const clash = kernels::find_collision_parallel(spec, gamma_symmetric, ctx.spec.cap);
      if (clash) {
        ctx.fail({{"perm", perm_json(clash->first)}, {"other", perm_json(clash->second)},
                  {"image", perm_json(gamma_symmetric(clash->first))}},
                 "map is not injective");
      }
    }
  }
}

void check_typeb_classes(Context &ctx)
{
  int const n_max = ctx.ip("n");
  for (int n = 1; n <= n_max; ++n) {
    auto const b = type_b_polys(n, false, ctx.spec.cap);
    auto const be = type_b_polys(n, true, ctx.spec.cap);
    for (int k : signed_firsts(n)) {
      ++ctx.report.examined;
      int const partner = (std::abs(k) == 1 && !ctx.spec.strict_paper) ? k : -k;
      if (b.at(k) != be.at(partner)) {
        ctx.fail({{"n", n}, {"k", k}, {"partner", partner}, {"B", poly_json(b.at(k))},
                  {"BE", poly_json(be.at(partner))}});
      }
    }
  }
}

void check_count_recurrence(Context &ctx)
{
  int const n_max = ctx.ip("n");
  for (int n = 1; n <= n_max; ++n) {
    auto const b = type_b_polys(n, false, ctx.spec.cap);
    for (int k : signed_firsts(n)) {
      for (int dsc = 0; dsc <= n; ++dsc) {
        ++ctx.report.examined;
        BigInt const rec = typeb_count_rec(n, dsc, k);
        if (rec != b.at(k).coeff(dsc)) {
          ctx.fail({{"n", n}, {"k", k}, {"dsc", dsc}, {"recurrence", to_json(rec)},
                    {"enumerated", to_json(b.at(k).coeff(dsc))}});
        }
      }
    }
  }
}

void check_poly_recurrence(Context &ctx)
{
  int const n_max = ctx.ip("n");
  for (int n = 1; n <= n_max; ++n) {
    auto const b = type_b_polys(n, false, ctx.spec.cap);
    for (int k : signed_firsts(n)) {
      ++ctx.report.examined;
      IntPoly const rec = typeb_des_poly_rec(n, k);
      if (rec != b.at(k)) {
        ctx.fail({{"n", n}, {"k", k}, {"recurrence", poly_json(rec)},
                  {"enumerated", poly_json(b.at(k))}});
      }
    }
    if (n >= 2) {
      // boundary classes against the whole-group descent polynomial of S_{n-1}
      auto const prev = kernels::histogram_parallel(
        GroupSpec::unsigned_colors(n - 1, 1), [](const ColoredPerm &p) { return des(p); },
        ctx.spec.cap);
      BigInt scale = 1;
      scale <<= static_cast<unsigned>(n - 1);
      IntPoly const boundary = (from_counts(prev) * scale).shifted(1);
      for (int k : {n, -n}) {
        ++ctx.report.examined;
        if (b.at(k) != boundary) {
          ctx.fail({{"n", n}, {"k", k}, {"boundary", poly_json(boundary)},
                    {"enumerated", poly_json(b.at(k))}});
        }
      }
    }
  }
}

void check_lemma_drop(Context &ctx)
{
  int const n_max = ctx.ip("n");
  for (int n1 = 2; n1 <= n_max; ++n1) {
    auto const lower = type_b_polys(n1 - 1, false, ctx.spec.cap);
    auto const upper = type_b_polys(n1, false, ctx.spec.cap);
    RestrictedFamily const level = [&](int i) { return lower.at(i); };
    for (int k : signed_firsts(n1)) {
      ++ctx.report.examined;
      IntPoly const rhs = lemma_drop_rhs(n1, k, level);
      if (rhs != upper.at(k)) {
        ctx.fail({{"n", n1}, {"k", k}, {"rhs", poly_json(rhs)}, {"enumerated", poly_json(upper.at(k))}});
      }
    }
  }
}

void check_palindromic(Context &ctx)
{
  int const n_max = ctx.ip("n");
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      ctx.report.examined += 2;
      IntPoly const bar = symmetrized_bar(n, k);
      IntPoly const tilde = symmetrized_tilde(n, k);
      if (!is_palindromic(bar, n))
        ctx.fail({{"n", n}, {"k", k}, {"family", "Bbar"}, {"m", n}, {"poly", poly_json(bar)}});
      if (!is_palindromic(tilde, n + 1))
        ctx.fail({{"n", n}, {"k", k}, {"family", "Btilde"}, {"m", n + 1}, {"poly", poly_json(tilde)}});
    }
  }
}

// Palindromic about m/2 with a nonnegative gamma vector.
bool gamma_nonnegative(const IntPoly &f, int m, json &gamma_out)
{
  if (f.degree() > m || !is_palindromic(f, m))
    return false;
  auto const g = gamma_vector(f, m);
  gamma_out = json::array();
  for (const auto &x : g.gamma)
    gamma_out.push_back(to_json(x));
  return g.nonnegative();
}

void check_gamma_a(Context &ctx)
{
  int const n_max = ctx.ip("n");
  for (int n = 1; n <= n_max; ++n) {
    auto const a = type_a_polys(n, false, ctx.spec.cap);
    for (int j = 1; j <= n; ++j) {
      ++ctx.report.examined;
      IntPoly const f = a[j - 1] + a[n - j];
      json gamma;
      if (!gamma_nonnegative(f, n - 1, gamma))
        ctx.fail({{"n", n}, {"j", j}, {"m", n - 1}, {"poly", poly_json(f)}, {"gamma", gamma}});
    }
  }
}

void check_gamma_b(Context &ctx)
{
  // small cases written out by hand
  struct Base
  {
    const char *family;
    int k;
    IntPoly got;
    IntPoly want;
  };
  const Base bases[] = {
    {"Bbar", 1, symmetrized_bar(2, 1), IntPoly{1, 2, 1}},
    {"Btilde", 1, symmetrized_tilde(2, 1), IntPoly{0, 2, 2}},
    {"Bbar", 2, symmetrized_bar(2, 2), IntPoly{0, 4}},
    {"Btilde", 2, symmetrized_tilde(2, 2), IntPoly{0, 2, 2}},
  };
  for (const auto &b : bases) {
    ++ctx.report.examined;
    if (b.got != b.want)
      ctx.fail({{"n", 2}, {"k", b.k}, {"family", b.family}, {"expected", poly_json(b.want)},
                {"computed", poly_json(b.got)}});
  }

  int const n_max = ctx.ip("n");
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      ctx.report.examined += 2;
      json gamma;
      IntPoly const bar = symmetrized_bar(n, k);
      if (!gamma_nonnegative(bar, n, gamma))
        ctx.fail({{"n", n}, {"k", k}, {"family", "Bbar"}, {"m", n}, {"poly", poly_json(bar)}, {"gamma", gamma}});
      IntPoly const tilde = symmetrized_tilde(n, k);
      gamma = json();
      if (!gamma_nonnegative(tilde, n + 1, gamma))
        ctx.fail({{"n", n}, {"k", k}, {"family", "Btilde"}, {"m", n + 1}, {"poly", poly_json(tilde)},
                  {"gamma", gamma}});
    }
  }
}

void check_real_rooted(Context &ctx)
{
  int const n_max = ctx.ip("n");
  for (int n = 1; n <= n_max; ++n) {
    for (int k : signed_firsts(n)) {
      ++ctx.report.examined;
      IntPoly const f = typeb_des_poly_rec(n, k);
      if (!is_real_rooted(f))
        ctx.fail({{"n", n}, {"k", k}, {"poly", poly_json(f)},
                  {"distinct_real_roots", count_distinct_real_roots(square_free_part(f))}});
    }
  }
}

void check_carlitz(Context &ctx)
{
  int const n_max = ctx.ip("n");
  int const terms = ctx.ip("k");
  auto const form = ctx.spec.strict_paper ? CarlitzForm::printed : CarlitzForm::corrected;
  std::vector<std::string> cells;
  for (int n = 1; n <= n_max; ++n) {
    for (int i : signed_firsts(n)) {
      auto const lhs = carlitz_lhs(n, i, terms);
      auto const rhs = carlitz_rhs(n, i, terms, form);
      for (int c = 0; c <= terms; ++c) {
        ++ctx.report.examined;
        if (lhs[c] != rhs[c]) {
          cells.push_back("n=" + std::to_string(n) + ",i=" + std::to_string(i) + ",t^" + std::to_string(c));
          ctx.fail({{"n", n}, {"i", i}, {"terms", terms}, {"coefficient", c},
                    {"form", ctx.spec.strict_paper ? "printed" : "corrected"},
                    {"lhs", to_json(lhs[c])}, {"rhs", to_json(rhs[c])}});
        }
      }
    }
  }
  if (!cells.empty()) {
    std::string text = std::to_string(cells.size()) + " mismatching coefficients:";
    for (const auto &c : cells)
      text += " " + c;
    ctx.report.detail = text;
  }
}

void check_brenti(Context &ctx)
{
  int const n_max = ctx.ip("n");
  int const terms = ctx.ip("k");
  for (int n = 1; n <= n_max; ++n) {
    auto const lhs = brenti_lhs(n, terms);
    auto const rhs = brenti_rhs(n, terms);
    ctx.report.examined += static_cast<std::uint64_t>(terms) + 1;
    if (auto c = first_difference(lhs, rhs))
      ctx.fail({{"n", n}, {"terms", terms}, {"coefficient", *c}, {"lhs", to_json(lhs[*c])},
                {"rhs", to_json(rhs[*c])}});
  }
}

const std::vector<Entry> &registry()
{
  static const std::vector<Entry> entries = {
    {"table-n6", "restricted descent and excedance polynomials of S_6 against the frozen table", {},
     check_table_n6},
    {"thm1.1-conger", "alternating-sum count of first-letter descents against enumeration",
     {{"n", 8, 1, 12}}, check_conger},
    {"cor1.2-first-letter", "A_{n,1} = AExc_{n,1} = A_{n-1} and A_{n,j} = AExc_{n,n+2-j}",
     {{"n", 7, 2, 12}}, check_first_letter},
    {"thm1.3-equidistribution", "phi is a bijection with ldes(phi(p)) = lexc(p) under random orders",
     {{"n", 4, 1, 10}, {"d", 3, 1, 10}, {"seed", 0, 0, std::numeric_limits<std::int64_t>::max()},
      {"trials", 100, 1, 100000}},
     check_equidistribution},
    {"thm1.4-min-one", "min-one bijection: ldes(gamma(p)) = lexc(p) and the class map, all n, d up to the bounds",
     {{"n", 5, 1, 10}, {"d", 3, 1, 10}}, check_min_one},
    {"thm1.5-symmetric", "symmetric bijection: ldes(gamma(p)) = bexc(p) and the class map, all n, d up to the bounds",
     {{"n", 5, 1, 10}, {"d", 2, 1, 10}}, check_symmetric},
    {"cor1.6-typeb", "B_{n,k} = BE_{n,-k} for |k| >= 2 and B_{n,k} = BE_{n,k} for |k| = 1",
     {{"n", 7, 1, 10}}, check_typeb_classes},
    {"typeb-count-recurrence", "coefficient recurrence for signed first-letter descents against enumeration",
     {{"n", 6, 1, 10}}, check_count_recurrence},
    {"typeb-poly-recurrence", "polynomial recurrence and boundary classes against enumeration",
     {{"n", 6, 1, 10}}, check_poly_recurrence},
    {"lemma-drop-first", "first-letter deletion identity for B_{n+1,k} against enumeration",
     {{"n", 6, 2, 10}}, check_lemma_drop},
    {"prop-palindromic", "Bbar_{n,k} palindromic about n/2 and Btilde_{n,k} about (n+1)/2",
     {{"n", 12, 1, 40}}, check_palindromic},
    {"thm1.7-gamma-a", "A_{n,j} + A_{n,n+1-j} palindromic with nonnegative gamma vector",
     {{"n", 8, 1, 12}}, check_gamma_a},
    {"thm1.8-gamma-b", "Bbar and Btilde gamma vectors nonnegative, plus the n = 2 base cases",
     {{"n", 12, 1, 40}}, check_gamma_b},
    {"thm1.9-real-rooted", "Sturm certificate of real-rootedness for B_{n,k} and B_{n,-k}",
     {{"n", 12, 1, 40}}, check_real_rooted},
    {"thm1.10-carlitz", "B_{n,i}(t)/(1-t)^n against the closed-form series (k is the truncation order)",
     {{"n", 10, 1, 30}, {"k", 20, 0, 200}}, check_carlitz},
    {"cor-brenti", "sum of B_{n,k}(t) over k, divided by (1-t)^(n+1), against sum (2k+1)^n t^k",
     {{"n", 6, 1, 30}, {"k", 20, 0, 200}}, check_brenti},
  };
  return entries;
}

const Entry &find_entry(const std::string &id)
{
  for (const auto &e : registry())
    if (id == e.id)
      return e;
  throw invalid_input("unknown check id '" + id + "'");
}

void validate(const Entry &entry, const CheckSpec &spec)
{
  for (const auto &[key, value] : spec.params) {
    auto it = std::find_if(entry.params.begin(), entry.params.end(),
                           [&](const ParamDef &p) { return key == p.key; });
    if (it == entry.params.end())
      throw invalid_input(std::string("check ") + entry.id + " has no parameter '" + key + "'");
    if (value < it->min || value > it->max) {
      throw invalid_input(std::string("check ") + entry.id + ": " + key + "=" + std::to_string(value) +
                          " outside [" + std::to_string(it->min) + ", " + std::to_string(it->max) + "]");
    }
  }
}

std::string params_text(const Params &params)
{
  std::string out;
  for (const auto &[k, v] : params) {
    if (!out.empty())
      out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

} // namespace

std::vector<CheckSpec> list_checks()
{
  std::vector<CheckSpec> out;
  for (const auto &e : registry()) {
    CheckSpec s;
    s.id = e.id;
    s.summary = e.summary;
    for (const auto &p : e.params)
      s.params[p.key] = p.def;
    out.push_back(std::move(s));
  }
  return out;
}

CheckSpec default_check(const std::string &id)
{
  for (auto &s : list_checks())
    if (s.id == id)
      return s;
  throw invalid_input("unknown check id '" + id + "'");
}

IdentityReport run_check(const CheckSpec &spec)
{
  const Entry &entry = find_entry(spec.id);
  validate(entry, spec);

  CheckSpec full = spec;
  for (const auto &p : entry.params)
    full.params.try_emplace(p.key, p.def);
  if (full.summary.empty())
    full.summary = entry.summary;

  IdentityReport report;
  report.id = full.id;
  report.params = full.params;
  report.strict_paper = full.strict_paper;
  report.pass = true;

  auto const start = std::chrono::steady_clock::now();
  Context ctx{full, report};
  entry.run(ctx);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const IdentityReport &r)
{
  json out{{"check", r.id},
           {"params", r.params},
           {"strict_paper", r.strict_paper},
           {"status", r.pass ? "pass" : "fail"},
           {"examined", r.examined},
           {"seconds", r.seconds}};
  out["counterexample"] = r.counterexample;
  if (!r.detail.empty())
    out["detail"] = r.detail;
  return out;
}

std::string tsv_header()
{
  return "check\tparams\tstatus\texamined\tseconds\tcounterexample";
}

std::string to_tsv(const IdentityReport &r)
{
  std::ostringstream os;
  os << r.id << '\t' << params_text(r.params) << (r.strict_paper ? ",strict" : "") << '\t'
     << (r.pass ? "pass" : "fail") << '\t' << r.examined << '\t' << r.seconds << '\t'
     << (r.counterexample.is_null() ? "-" : r.counterexample.dump());
  return os.str();
}

Format parse_format(const std::string &text)
{
  if (text == "json")
    return Format::json;
  if (text == "tsv")
    return Format::tsv;
  throw invalid_input("unknown format '" + text + "' (json|tsv)");
}

TableFamily parse_family(const std::string &text)
{
  if (text == "A")
    return TableFamily::A;
  if (text == "AExc")
    return TableFamily::AExc;
  if (text == "B")
    return TableFamily::B;
  if (text == "BE")
    return TableFamily::BE;
  if (text == "colored-ldes")
    return TableFamily::colored_ldes;
  if (text == "colored-lexc")
    return TableFamily::colored_lexc;
  throw invalid_input("unknown table family '" + text + "'");
}

std::string to_string(TableFamily f)
{
  switch (f) {
  case TableFamily::A:
    return "A";
  case TableFamily::AExc:
    return "AExc";
  case TableFamily::B:
    return "B";
  case TableFamily::BE:
    return "BE";
  case TableFamily::colored_ldes:
    return "colored-ldes";
  case TableFamily::colored_lexc:
    return "colored-lexc";
  }
  return "?";
}

std::vector<TableRow> table_rows(TableFamily family, int n, int d, const std::string &order_text,
                                 std::uint64_t cap)
{
  if (n < 1 || d < 1)
    throw invalid_input("table: need n >= 1 and d >= 1");
  std::vector<TableRow> rows;
  switch (family) {
  case TableFamily::A:
  case TableFamily::AExc: {
    auto const polys = type_a_polys(n, family == TableFamily::AExc, cap);
    for (int j = 1; j <= n; ++j)
      rows.push_back({std::to_string(j), Letter{j, 0}, polys[j - 1]});
    break;
  }
  case TableFamily::B:
  case TableFamily::BE: {
    auto const polys = type_b_polys(n, family == TableFamily::BE, cap);
    for (int k : signed_firsts(n))
      rows.push_back({std::to_string(k), signed_letter(k), polys.at(k)});
    break;
  }
  case TableFamily::colored_ldes:
  case TableFamily::colored_lexc: {
    auto const spec = GroupSpec::unsigned_colors(n, d);
    LinearOrder const order = parse_order(order_text, spec);
    bool const use_exc = family == TableFamily::colored_lexc;
    auto const polys = class_polys(
      spec,
      [&](const ColoredPerm &p) { return use_exc ? lexc(p, order) : ldes(p, order); }, cap);
    auto const firsts = first_letters(spec);
    for (std::size_t c = 0; c < firsts.size(); ++c)
      rows.push_back({to_string(firsts[c]), firsts[c], polys[c]});
    break;
  }
  }
  return rows;
}

std::string emit_table(TableFamily family, int n, int d, Format format, const std::string &order,
                       std::uint64_t cap)
{
  auto const rows = table_rows(family, n, d, order, cap);
  bool const colored = family == TableFamily::colored_ldes || family == TableFamily::colored_lexc;
  if (format == Format::json) {
    json out{{"family", to_string(family)}, {"n", n}};
    if (colored) {
      out["d"] = d;
      out["order"] = order;
    }
    out["rows"] = json::array();
    for (const auto &r : rows)
      out["rows"].push_back({{"class", r.label}, {"poly", to_string(r.poly)}, {"coeffs", coeffs_json(r.poly)}});
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "class\tpoly\tcoeffs\n";
  for (const auto &r : rows) {
    os << r.label << '\t' << to_string(r.poly) << '\t';
    for (std::size_t i = 0; i < r.poly.coeffs().size(); ++i)
      os << (i ? "," : "") << r.poly.coeffs()[i].get_str();
    os << '\n';
  }
  return os.str();
}

} // namespace permlab::harness
