#include "permlab/statistics.hpp"

#include "permlab/error.hpp"

namespace permlab
{

namespace
{

void require_alphabet(const ColoredPerm &p, const LinearOrder &order)
{
  if (!(order.alphabet() == Alphabet(p.spec()))) {
    throw invalid_input("order over " + to_string(order.alphabet()) + " used on a word over " +
                        to_string(Alphabet(p.spec())));
  }
}

void require_unsigned(const ColoredPerm &p, const char *what)
{
  if (p.spec().is_signed())
    throw unsupported_operation(std::string(what) + " is defined on unsigned groups only");
}

void require_signed(const ColoredPerm &p, const char *what)
{
  if (!p.spec().is_signed())
    throw unsupported_operation(std::string(what) + " is defined on signed groups only");
}

void require_one_color(const ColoredPerm &p, bool want_signed, const char *what)
{
  if (p.spec().is_signed() != want_signed || p.spec().d() != 1) {
    throw unsupported_operation(std::string(what) + " is defined on " +
                                (want_signed ? "Signed(1)" : "Unsigned(1)") + " only");
  }
}

int signed_value(const ColoredPerm &p, int pos)
{
  return p.color(pos) < 0 ? -p.value(pos) : p.value(pos);
}

// Shared by ldes/lasc. descents == true counts (left > right).
int adjacent_count(const ColoredPerm &p, const LinearOrder &order, bool descents,
                   std::vector<int> *positions)
{
  int count = 0;
  auto consider = [&](int index, Letter left, Letter right) {
    bool const hit = descents ? order.greater(left, right) : order.less(left, right);
    if (hit) {
      ++count;
      if (positions)
        positions->push_back(index);
    }
  };
  if (p.spec().is_signed() && p.size() > 0)
    consider(0, zero_letter, p.letter(0));
  for (int i = 0; i + 1 < p.size(); ++i)
    consider(i + 1, p.letter(i), p.letter(i + 1));
  return count;
}

int excedance_count(const ColoredPerm &p, const LinearOrder &order, std::vector<int> *positions)
{
  int count = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (order.greater(p.image_letter(i), p.letter(i))) {
      ++count;
      if (positions)
        positions->push_back(i + 1);
    }
  }
  return count;
}

template <typename Greater>
int bexc_count(const ColoredPerm &p, Greater greater, std::vector<int> *positions)
{
  int count = 0;
  for (int i = 0; i < p.size(); ++i) {
    bool const negative_fixed = p.value(i) == i + 1 && p.color(i) < 0;
    if (negative_fixed || greater(p.image_letter(i), p.letter(i))) {
      ++count;
      if (positions)
        positions->push_back(i + 1);
    }
  }
  return count;
}

} // namespace

std::string to_string(StatName s)
{
  switch (s) {
  case StatName::ldes: return "ldes";
  case StatName::lasc: return "lasc";
  case StatName::lexc: return "lexc";
  case StatName::bexc: return "bexc";
  case StatName::des: return "des";
  case StatName::exc: return "exc";
  case StatName::des_b: return "des_b";
  case StatName::exc_b: return "exc_b";
  case StatName::asc_b: return "asc_b";
  }
  return "?";
}

StatName parse_stat(const std::string &text)
{
  for (StatName s : {StatName::ldes, StatName::lasc, StatName::lexc, StatName::bexc, StatName::des,
                     StatName::exc, StatName::des_b, StatName::exc_b, StatName::asc_b}) {
    if (to_string(s) == text)
      return s;
  }
  throw invalid_input("unknown statistic '" + text + "'");
}

int ldes(const ColoredPerm &p, const LinearOrder &order)
{
  require_alphabet(p, order);
  return adjacent_count(p, order, true, nullptr);
}

int lasc(const ColoredPerm &p, const LinearOrder &order)
{
  require_alphabet(p, order);
  return adjacent_count(p, order, false, nullptr);
}

int lexc(const ColoredPerm &p, const LinearOrder &order)
{
  require_unsigned(p, "lexc");
  require_alphabet(p, order);
  return excedance_count(p, order, nullptr);
}

int bexc(const ColoredPerm &p)
{
  require_signed(p, "bexc");
  int const n = p.spec().n(), d = p.spec().d();
  return bexc_count(
      p, [n, d](Letter a, Letter b) { return symmetric_rank(a, n, d) > symmetric_rank(b, n, d); },
      nullptr);
}

int bexc(const ColoredPerm &p, const LinearOrder &symmetric)
{
  require_signed(p, "bexc");
  require_alphabet(p, symmetric);
  return bexc_count(
      p, [&symmetric](Letter a, Letter b) { return symmetric.greater(a, b); }, nullptr);
}

int des(const ColoredPerm &p)
{
  require_one_color(p, false, "des");
  int count = 0;
  for (int i = 0; i + 1 < p.size(); ++i)
    count += p.value(i) > p.value(i + 1) ? 1 : 0;
  return count;
}

int exc(const ColoredPerm &p)
{
  require_one_color(p, false, "exc");
  int count = 0;
  for (int i = 0; i < p.size(); ++i)
    count += p.value(i) > i + 1 ? 1 : 0;
  return count;
}

int des_b(const ColoredPerm &p)
{
  require_one_color(p, true, "des_b");
  int count = 0;
  int prev = 0;
  for (int i = 0; i < p.size(); ++i) {
    int const cur = signed_value(p, i);
    count += prev > cur ? 1 : 0;
    prev = cur;
  }
  return count;
}

int exc_b(const ColoredPerm &p)
{
  require_one_color(p, true, "exc_b");
  return bexc(p);
}

int asc_b(const ColoredPerm &p)
{
  return p.size() - des_b(p);
}

void require_compatible(StatName name, const GroupSpec &spec)
{
  switch (name) {
  case StatName::ldes:
  case StatName::lasc:
    return;
  case StatName::lexc:
    if (spec.is_signed())
      throw unsupported_operation("lexc is defined on unsigned groups only (use bexc)");
    return;
  case StatName::bexc:
    if (!spec.is_signed())
      throw unsupported_operation("bexc is defined on signed groups only");
    return;
  case StatName::des:
  case StatName::exc:
    if (spec.is_signed() || spec.d() != 1)
      throw unsupported_operation(to_string(name) + " is defined on Unsigned(1) only");
    return;
  case StatName::des_b:
  case StatName::exc_b:
  case StatName::asc_b:
    if (!spec.is_signed() || spec.d() != 1)
      throw unsupported_operation(to_string(name) + " is defined on Signed(1) only");
    return;
  }
}

int evaluate(StatName name, const ColoredPerm &p, const LinearOrder *order, std::vector<int> *positions)
{
  require_compatible(name, p.spec());
  if (positions)
    positions->clear();

  auto need_order = [&]() -> const LinearOrder & {
    if (!order)
      throw invalid_input(to_string(name) + " needs a linear order");
    require_alphabet(p, *order);
    return *order;
  };

  switch (name) {
  case StatName::ldes:
    return adjacent_count(p, need_order(), true, positions);
  case StatName::lasc:
    return adjacent_count(p, need_order(), false, positions);
  case StatName::lexc:
    return excedance_count(p, need_order(), positions);
  case StatName::bexc:
  case StatName::exc_b: {
    int const n = p.spec().n(), d = p.spec().d();
    return bexc_count(
        p, [n, d](Letter a, Letter b) { return symmetric_rank(a, n, d) > symmetric_rank(b, n, d); },
        positions);
  }
  case StatName::des:
  case StatName::des_b:
  case StatName::asc_b: {
    // the natural / integer order coincides with color-major at d=1 and
    // the symmetric order at Signed(1)
    LinearOrder const natural = p.spec().is_signed() ? symmetric_order(p.size(), 1)
                                                     : color_major_order(p.size(), 1);
    bool const descents = name != StatName::asc_b;
    return adjacent_count(p, natural, descents, positions);
  }
  case StatName::exc: {
    int count = 0;
    for (int i = 0; i < p.size(); ++i) {
      if (p.value(i) > i + 1) {
        ++count;
        if (positions)
          positions->push_back(i + 1);
      }
    }
    return count;
  }
  }
  return 0;
}

} // namespace permlab
