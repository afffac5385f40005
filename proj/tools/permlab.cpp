// permlab: command-line front end for statistics, bijections, polynomial
// families, series identities and the named checks.
//
// Exit codes: 0 success / all checks pass, 1 a check or identity failed,
// 2 usage, parse or size errors.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permlab/bijections.hpp"
#include "permlab/carlitz.hpp"
#include "permlab/error.hpp"
#include "permlab/families.hpp"
#include "permlab/gamma.hpp"
#include "permlab/harness.hpp"
#include "permlab/kernels.hpp"
#include "permlab/order.hpp"
#include "permlab/statistics.hpp"
#include "permlab/sturm.hpp"

using namespace permlab;
using nlohmann::json;

namespace
{

constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::vector<int> parse_ints(const std::string &text, const char *what)
{
  std::vector<int> out;
  std::string token;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  while (is >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != token.size())
      throw invalid_input(std::string("bad integer '") + token + "' in " + what);
    out.push_back(v);
  }
  if (out.empty())
    throw invalid_input(std::string("empty ") + what);
  return out;
}

struct WordArgs
{
  std::string word;
  std::string colors;
  int d = 0; // 0: infer from the colors
  bool is_signed = false;
};

void add_word_options(CLI::App *cmd, WordArgs &w)
{
  cmd->add_option("--word", w.word, "values v1,v2,...,vn")->required();
  cmd->add_option("--colors", w.colors, "colors c1,...,cn (default all 0, or all +1 with --signed)");
  cmd->add_option("--d", w.d, "number of colors (default: inferred from --colors)")->check(CLI::PositiveNumber);
  cmd->add_flag("--signed", w.is_signed, "zero-prefixed group with colors +-1..+-d");
}

ColoredPerm build_perm(const WordArgs &w)
{
  std::vector<int> const values = parse_ints(w.word, "--word");
  std::vector<int> colors;
  if (w.colors.empty())
    colors.assign(values.size(), w.is_signed ? 1 : 0);
  else
    colors = parse_ints(w.colors, "--colors");
  if (colors.size() != values.size())
    throw invalid_input("--word and --colors have different lengths");

  int d = w.d;
  if (d == 0) {
    d = 1;
    for (int c : colors)
      d = std::max(d, w.is_signed ? std::abs(c) : c + 1);
  }
  int const n = static_cast<int>(values.size());
  GroupSpec const spec = w.is_signed ? GroupSpec::signed_colors(n, d) : GroupSpec::unsigned_colors(n, d);
  return make_perm(values, colors, spec);
}

std::string join(const std::vector<int> &v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

// ------------------------------------------------------------------ stat

struct StatArgs
{
  WordArgs word;
  std::string stat;
  std::string order = "color-major";
  bool verbose = false;
};

int run_stat(const StatArgs &a)
{
  ColoredPerm const p = build_perm(a.word);
  StatName const name = parse_stat(a.stat);
  require_compatible(name, p.spec());
  std::optional<LinearOrder> order;
  if (name == StatName::ldes || name == StatName::lasc || name == StatName::lexc)
    order = parse_order(a.order, p.spec());
  std::vector<int> positions;
  int const value = evaluate(name, p, order ? &*order : nullptr, &positions);
  std::cout << value << '\n';
  if (a.verbose)
    std::cout << "positions: " << join(positions) << '\n';
  return 0;
}

// ------------------------------------------------------------- bijection

struct BijectionArgs
{
  WordArgs word;
  std::string map;
  std::string order = "color-major";
  bool inverse = false;
};

int run_bijection(const BijectionArgs &a)
{
  ColoredPerm const in = build_perm(a.word);
  int const n = in.spec().n();
  int const d = in.spec().d();

  std::optional<ColoredPerm> out;
  std::string source_stat, target_stat;
  int source_value = 0, target_value = 0;

  // source = the side carrying the excedance-type statistic
  auto report = [&](const ColoredPerm &source, const ColoredPerm &target, const LinearOrder &order,
                    bool symmetric) {
    source_stat = symmetric ? "bexc" : "lexc";
    target_stat = "ldes";
    source_value = symmetric ? bexc(source) : lexc(source, order);
    target_value = ldes(target, order);
  };

  if (a.map == "phi") {
    LinearOrder const order = parse_order(a.order, in.spec());
    out = a.inverse ? phi_inverse(in, order) : phi(in, order);
    a.inverse ? report(*out, in, order, false) : report(in, *out, order, false);
  } else if (a.map == "gamma-min-one") {
    if (in.spec().is_signed())
      throw unsupported_operation("gamma-min-one needs an unsigned group");
    LinearOrder const order = min_one_order(n, d);
    out = a.inverse ? gamma_min_one_inverse(in) : gamma_min_one(in);
    a.inverse ? report(*out, in, order, false) : report(in, *out, order, false);
  } else if (a.map == "gamma-sym") {
    if (!in.spec().is_signed())
      throw unsupported_operation("gamma-sym needs --signed");
    LinearOrder const order = symmetric_order(n, d);
    out = a.inverse ? gamma_symmetric_inverse(in) : gamma_symmetric(in);
    a.inverse ? report(*out, in, order, true) : report(in, *out, order, true);
  } else {
    throw invalid_input("unknown map '" + a.map + "' (phi|gamma-min-one|gamma-sym)");
  }

  std::cout << "input\t" << to_string(in) << '\n'
            << "output\t" << to_string(*out) << '\n'
            << (a.inverse ? "input " : "output ") << target_stat << '\t' << target_value << '\n'
            << (a.inverse ? "output " : "input ") << source_stat << '\t' << source_value << '\n';
  return 0;
}

// ------------------------------------------------------------------ poly

struct PolyArgs
{
  std::string family;
  int n = 0;
  int k = 0;
  bool gamma = false;
  bool sturm = false;
  bool enumerate = false;
  std::string format = "json";
};

IntPoly enumerated_restricted(const std::string &family, int n, int k)
{
  using harness::TableFamily;
  TableFamily const fam = harness::parse_family(family);
  std::string const label = std::to_string(k);
  for (const auto &row : harness::table_rows(fam, n))
    if (row.label == label)
      return row.poly;
  throw invalid_input("k=" + label + " is not a first letter for n=" + std::to_string(n));
}

IntPoly family_poly(const PolyArgs &a)
{
  if (a.n < 1)
    throw invalid_input("--n must be >= 1");
  bool const type_a = a.family == "A" || a.family == "AExc";
  if (type_a ? (a.k < 1 || a.k > a.n) : (a.k == 0 || std::abs(a.k) > a.n))
    throw invalid_input("--k out of range for n=" + std::to_string(a.n));

  if (a.family == "A" && !a.enumerate) {
    std::vector<BigInt> c;
    for (int dsc = 0; dsc < a.n; ++dsc)
      c.push_back(conger_count(a.n, dsc, a.k));
    return IntPoly(std::move(c));
  }
  if (a.family == "B" && !a.enumerate)
    return typeb_des_poly_rec(a.n, a.k);
  if (a.family == "A" || a.family == "AExc" || a.family == "B" || a.family == "BE")
    return enumerated_restricted(a.family, a.n, a.k);
  if (a.family == "Bbar" || a.family == "Btilde") {
    if (a.k < 1)
      throw invalid_input("--k must be positive for " + a.family);
    return a.family == "Bbar" ? symmetrized_bar(a.n, a.k) : symmetrized_tilde(a.n, a.k);
  }
  throw invalid_input("unknown family '" + a.family + "' (A|AExc|B|BE|Bbar|Btilde)");
}

int run_poly(const PolyArgs &a)
{
  harness::Format const format = harness::parse_format(a.format);
  IntPoly const f = family_poly(a);

  json out{{"family", a.family}, {"n", a.n}, {"k", a.k}, {"coeffs", harness::coeffs_json(f)}};
  if (a.gamma) {
    // centre of symmetry read off the support
    int const m = f.is_zero() ? 0 : f.low_degree() + f.degree();
    if (!f.is_zero() && is_palindromic(f, m)) {
      json g = json::array();
      for (const auto &x : gamma_vector(f, m).gamma)
        g.push_back(harness::to_json(x));
      out["gamma"] = g;
      out["gamma_degree"] = m;
    } else {
      out["gamma"] = nullptr;
    }
  }
  if (a.sturm)
    out["real_rooted"] = is_real_rooted(f);

  if (format == harness::Format::json) {
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "family\tn\tk\tpoly\tcoeffs";
  if (a.gamma)
    std::cout << "\tgamma";
  if (a.sturm)
    std::cout << "\treal_rooted";
  std::cout << '\n' << a.family << '\t' << a.n << '\t' << a.k << '\t' << to_string(f) << '\t';
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    std::cout << (i ? "," : "") << f.coeffs()[i].get_str();
  if (a.gamma) {
    std::cout << '\t';
    if (out["gamma"].is_null()) {
      std::cout << "-";
    } else {
      bool first = true;
      for (const auto &g : out["gamma"]) {
        std::cout << (first ? "" : ",") << (g.is_string() ? g.get<std::string>() : g.dump());
        first = false;
      }
    }
  }
  if (a.sturm)
    std::cout << '\t' << (out["real_rooted"].get<bool>() ? "true" : "false");
  std::cout << '\n';
  return 0;
}

// ---------------------------------------------------------------- series

struct SeriesArgs
{
  std::string identity;
  int n = 0;
  int i = 0;
  int terms = 20;
  bool strict = false;
  std::string format = "json";
};

int run_series(const SeriesArgs &a)
{
  harness::Format const format = harness::parse_format(a.format);
  std::optional<TruncatedSeries> lhs, rhs;
  if (a.identity == "carlitz") {
    auto const form = a.strict ? CarlitzForm::printed : CarlitzForm::corrected;
    lhs = carlitz_lhs(a.n, a.i, a.terms);
    rhs = carlitz_rhs(a.n, a.i, a.terms, form);
  } else if (a.identity == "brenti") {
    lhs = brenti_lhs(a.n, a.terms);
    rhs = brenti_rhs(a.n, a.terms);
  } else {
    throw invalid_input("unknown identity '" + a.identity + "' (carlitz|brenti)");
  }
  auto const diff = first_difference(*lhs, *rhs);

  if (format == harness::Format::json) {
    auto coeffs = [](const TruncatedSeries &s) {
      json arr = json::array();
      for (const auto &c : s.coeffs())
        arr.push_back(harness::to_json(c));
      return arr;
    };
    json out{{"identity", a.identity}, {"n", a.n}, {"terms", a.terms},
             {"lhs", coeffs(*lhs)}, {"rhs", coeffs(*rhs)}, {"equal", !diff}};
    if (a.identity == "carlitz") {
      out["i"] = a.i;
      out["strict_paper"] = a.strict;
    }
    out["first_difference"] = diff ? json(*diff) : json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "side\tcoeffs\n"
              << "lhs\t" << to_string(*lhs) << '\n'
              << "rhs\t" << to_string(*rhs) << '\n'
              << "equal\t" << (diff ? "false" : "true") << '\n';
    if (diff)
      std::cout << "first_difference\t" << *diff << '\n';
  }
  return diff ? exit_failed : 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs
{
  std::string check;
  bool all = false;
  std::optional<std::int64_t> n, d, k, seed, trials;
  bool strict = false;
  std::string format = "json";
};

int run_verify(const VerifyArgs &a)
{
  harness::Format const format = harness::parse_format(a.format);
  if (a.all == !a.check.empty())
    throw invalid_input("give exactly one of --check <id> or --all");

  std::vector<harness::CheckSpec> specs;
  if (a.all)
    specs = harness::list_checks();
  else
    specs.push_back(harness::default_check(a.check));

  for (auto &s : specs) {
    s.strict_paper = a.strict;
    auto apply = [&](const char *key, const std::optional<std::int64_t> &v) {
      if (!v)
        return;
      // --all only overrides parameters a check actually has
      if (s.params.count(key) || !a.all)
        s.params[key] = *v;
    };
    apply("n", a.n);
    apply("d", a.d);
    apply("k", a.k);
    apply("seed", a.seed);
    apply("trials", a.trials);
  }

  std::vector<harness::IdentityReport> reports;
  bool all_pass = true;
  if (format == harness::Format::tsv)
    std::cout << harness::tsv_header() << '\n';
  for (const auto &s : specs) {
    reports.push_back(harness::run_check(s));
    all_pass = all_pass && reports.back().pass;
    if (format == harness::Format::tsv)
      std::cout << harness::to_tsv(reports.back()) << std::endl;
  }

  if (format == harness::Format::json) {
    if (a.all) {
      json out{{"status", all_pass ? "pass" : "fail"}, {"reports", json::array()}};
      for (const auto &r : reports)
        out["reports"].push_back(harness::to_json(r));
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << harness::to_json(reports.front()).dump(2) << '\n';
    }
  }
  return all_pass ? 0 : exit_failed;
}

// ----------------------------------------------------------------- table

struct TableArgs
{
  std::string family;
  int n = 0;
  int d = 1;
  std::string order = "color-major";
  std::string format = "tsv";
};

int run_table(const TableArgs &a)
{
  std::cout << harness::emit_table(harness::parse_family(a.family), a.n, a.d,
                                   harness::parse_format(a.format), a.order);
  return 0;
}

// ------------------------------------------------------------------ list

int run_list(const std::string &format_text)
{
  harness::Format const format = harness::parse_format(format_text);
  auto const checks = harness::list_checks();
  if (format == harness::Format::json) {
    json out = json::array();
    for (const auto &c : checks)
      out.push_back({{"id", c.id}, {"params", c.params}, {"summary", c.summary}});
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "id\tparams\tsummary\n";
  for (const auto &c : checks) {
    std::string params;
    for (const auto &[k, v] : c.params)
      params += (params.empty() ? "" : ",") + k + "=" + std::to_string(v);
    std::cout << c.id << '\t' << (params.empty() ? "-" : params) << '\t' << c.summary << '\n';
  }
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Descent and excedance statistics on colored permutation groups"};
  app.require_subcommand(1);

  StatArgs stat_args;
  auto *stat_cmd = app.add_subcommand("stat", "evaluate a statistic on one word");
  add_word_options(stat_cmd, stat_args.word);
  stat_cmd->add_option("--stat", stat_args.stat, "ldes|lasc|lexc|bexc|des|exc|des_b|exc_b|asc_b")->required();
  stat_cmd->add_option("--order", stat_args.order, "color-major|min-one|symmetric|random:<seed>|list:v.c,...");
  stat_cmd->add_flag("--verbose", stat_args.verbose, "also print the positions counted");

  BijectionArgs bij_args;
  auto *bij_cmd = app.add_subcommand("bijection", "apply phi, gamma-min-one or gamma-sym");
  add_word_options(bij_cmd, bij_args.word);
  bij_cmd->add_option("--map", bij_args.map, "phi|gamma-min-one|gamma-sym")->required();
  bij_cmd->add_option("--order", bij_args.order, "order for phi");
  bij_cmd->add_flag("--inverse", bij_args.inverse, "apply the inverse map");

  PolyArgs poly_args;
  auto *poly_cmd = app.add_subcommand("poly", "restricted Eulerian polynomials");
  poly_cmd->add_option("--family", poly_args.family, "A|AExc|B|BE|Bbar|Btilde")->required();
  poly_cmd->add_option("--n", poly_args.n)->required();
  poly_cmd->add_option("--k", poly_args.k, "first letter (signed for B/BE)")->required();
  poly_cmd->add_flag("--gamma", poly_args.gamma, "gamma vector about its centre of symmetry");
  poly_cmd->add_flag("--sturm", poly_args.sturm, "real-rootedness by Sturm sequence");
  poly_cmd->add_flag("--enumerate", poly_args.enumerate, "count over the group instead of using a formula");
  poly_cmd->add_option("--format", poly_args.format, "json|tsv");

  SeriesArgs series_args;
  auto *series_cmd = app.add_subcommand("series", "compare both sides of a series identity");
  series_cmd->add_option("--identity", series_args.identity, "carlitz|brenti")->required();
  series_cmd->add_option("--n", series_args.n)->required();
  series_cmd->add_option("--i", series_args.i, "signed first letter (carlitz)");
  series_cmd->add_option("--terms", series_args.terms, "truncation order K");
  series_cmd->add_flag("--strict-paper", series_args.strict, "sum both signs from k = 1");
  series_cmd->add_option("--format", series_args.format, "json|tsv");

  VerifyArgs verify_args;
  auto *verify_cmd = app.add_subcommand("verify", "run named checks");
  verify_cmd->add_option("--check", verify_args.check, "check id (see `permlab list`)");
  verify_cmd->add_flag("--all", verify_args.all, "run every check at its default bounds");
  verify_cmd->add_option("--n", verify_args.n);
  verify_cmd->add_option("--d", verify_args.d);
  verify_cmd->add_option("--k", verify_args.k);
  verify_cmd->add_option("--seed", verify_args.seed);
  verify_cmd->add_option("--trials", verify_args.trials);
  verify_cmd->add_flag("--strict-paper", verify_args.strict, "run identities exactly as printed");
  verify_cmd->add_option("--format", verify_args.format, "json|tsv");

  TableArgs table_args;
  auto *table_cmd = app.add_subcommand("table", "one row per first-letter class");
  table_cmd->add_option("--family", table_args.family, "A|AExc|B|BE|colored-ldes|colored-lexc")->required();
  table_cmd->add_option("--n", table_args.n)->required();
  table_cmd->add_option("--d", table_args.d);
  table_cmd->add_option("--order", table_args.order, "order for the colored families");
  table_cmd->add_option("--format", table_args.format, "json|tsv");

  std::string list_format = "tsv";
  auto *list_cmd = app.add_subcommand("list", "list registered checks");
  list_cmd->add_option("--format", list_format, "json|tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*stat_cmd)
      return run_stat(stat_args);
    if (*bij_cmd)
      return run_bijection(bij_args);
    if (*poly_cmd)
      return run_poly(poly_args);
    if (*series_cmd)
      return run_series(series_args);
    if (*verify_cmd)
      return run_verify(verify_args);
    if (*table_cmd)
      return run_table(table_args);
    if (*list_cmd)
      return run_list(list_format);
  } catch (const std::logic_error &e) {
    // invalid_input, unsupported_operation and size_limit_exceeded
    std::cerr << "permlab: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
