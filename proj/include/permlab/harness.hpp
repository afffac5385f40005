#ifndef PERMLAB_HARNESS_HPP
#define PERMLAB_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permlab/group.hpp"
#include "permlab/poly.hpp"

namespace permlab::harness
{

using Params = std::map<std::string, std::int64_t>;

struct CheckSpec
{
  std::string id;
  /// Every parameter the check accepts, with its value. list_checks() fills
  /// in the defaults.
  Params params;
  bool strict_paper = false;
  std::uint64_t cap = default_element_cap();
  std::string summary;
};

struct IdentityReport
{
  std::string id;
  Params params;
  bool strict_paper = false;
  bool pass = false;
  /// Null on pass. Otherwise the first failing element or cell, with enough
  /// fields to recompute both sides.
  nlohmann::json counterexample;
  std::uint64_t examined = 0;
  double seconds = 0.0;
  std::string detail;
};

/// Registry in a fixed order.
std::vector<CheckSpec> list_checks();

/// Registry entry for id with default params. Throws invalid_input.
CheckSpec default_check(const std::string &id);

/// Throws invalid_input for unknown ids, unknown params or out-of-range
/// values, and size_limit_exceeded when an enumeration exceeds spec.cap.
IdentityReport run_check(const CheckSpec &spec);

nlohmann::json to_json(const IdentityReport &r);
std::string tsv_header();
std::string to_tsv(const IdentityReport &r);

enum class Format
{
  json,
  tsv
};
Format parse_format(const std::string &text);

enum class TableFamily
{
  A,
  AExc,
  B,
  BE,
  colored_ldes,
  colored_lexc
};
TableFamily parse_family(const std::string &text);
std::string to_string(TableFamily f);

struct TableRow
{
  std::string label; // "3" for A/AExc, "-2" for B/BE, "2_1" for colored
  Letter first;
  IntPoly poly;
};

/// One row per first-letter class. A/AExc rows run j = 1..n, B/BE rows run
/// k = 1, -1, 2, -2, ..., colored rows follow first_letters(Unsigned(d)).
/// order is only read by the colored families.
std::vector<TableRow> table_rows(TableFamily family, int n, int d = 1,
                                 const std::string &order = "color-major",
                                 std::uint64_t cap = default_element_cap());

std::string emit_table(TableFamily family, int n, int d, Format format,
                       const std::string &order = "color-major",
                       std::uint64_t cap = default_element_cap());

/// Big integer as a JSON number when it fits in 64 bits, else a string.
nlohmann::json to_json(const BigInt &v);
nlohmann::json coeffs_json(const IntPoly &f);

} // namespace permlab::harness

#endif // PERMLAB_HARNESS_HPP
