#include "permlab/bijections.hpp"

#include <algorithm>

#include "permlab/error.hpp"

namespace permlab
{

namespace
{

using Cycle = std::vector<Letter>;

void require_alphabet(const ColoredPerm &p, const LinearOrder &order)
{
  if (!(order.alphabet() == Alphabet(p.spec()))) {
    throw invalid_input("order over " + to_string(order.alphabet()) + " used on a word over " +
                        to_string(Alphabet(p.spec())));
  }
}

// Rotate so that the entry selected by `last` ends the cycle.
template <typename Better>
void rotate_to_end(Cycle &cycle, Better better)
{
  auto const it = std::min_element(cycle.begin(), cycle.end(), better);
  std::rotate(cycle.begin(), it + 1, cycle.end());
}

std::vector<Letter> concatenate(const std::vector<Cycle> &cycles)
{
  std::vector<Letter> word;
  for (const auto &c : cycles)
    word.insert(word.end(), c.begin(), c.end());
  return word;
}

// Split a word after each position whose letter is "record" relative to all
// later letters, i.e. before(word[i], x) for every later x.
template <typename Before>
std::vector<Cycle> split_at_suffix_records(const std::vector<Letter> &word, Before before)
{
  std::vector<Cycle> cycles;
  std::vector<bool> cut(word.size(), false);
  std::size_t best = word.size();
  for (std::size_t i = word.size(); i-- > 0;) {
    if (best == word.size() || before(word[i], word[best])) {
      cut[i] = true;
      best = i;
    }
  }
  Cycle current;
  for (std::size_t i = 0; i < word.size(); ++i) {
    current.push_back(word[i]);
    if (cut[i]) {
      cycles.push_back(std::move(current));
      current.clear();
    }
  }
  return cycles;
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

} // namespace

ColoredPerm phi(const ColoredPerm &p, const LinearOrder &order)
{
  require_unsigned(p, "phi");
  require_alphabet(p, order);
  auto const larger = [&order](Letter a, Letter b) { return order.greater(a, b); };

  std::vector<Cycle> cycles = cycle_decomposition(p).cycles;
  for (auto &c : cycles)
    rotate_to_end(c, larger);
  std::sort(cycles.begin(), cycles.end(),
            [&](const Cycle &a, const Cycle &b) { return larger(a.back(), b.back()); });

  std::vector<Letter> word = concatenate(cycles);
  std::reverse(word.begin(), word.end());
  return ColoredPerm::from_word(p.spec(), word);
}

ColoredPerm phi_inverse(const ColoredPerm &w, const LinearOrder &order)
{
  require_unsigned(w, "phi_inverse");
  require_alphabet(w, order);
  std::vector<Letter> word = w.word();
  std::reverse(word.begin(), word.end());
  auto cycles = split_at_suffix_records(word, [&order](Letter a, Letter b) { return order.greater(a, b); });
  return from_cycle_form(CycleForm{w.spec(), std::move(cycles)});
}

ColoredPerm gamma_min_one(const ColoredPerm &p)
{
  require_unsigned(p, "gamma_min_one");
  int const n = p.spec().n(), d = p.spec().d();
  LinearOrder const order = min_one_order(n, d);
  auto const smaller = [&order](Letter a, Letter b) { return order.less(a, b); };

  std::vector<Cycle> cycles = cycle_decomposition(p).cycles;
  for (auto &c : cycles) {
    for (auto &l : c)
      l = min_one_swap(l, n, d);
    rotate_to_end(c, smaller);
  }
  std::sort(cycles.begin(), cycles.end(),
            [&](const Cycle &a, const Cycle &b) { return smaller(a.back(), b.back()); });
  return ColoredPerm::from_word(p.spec(), concatenate(cycles));
}

ColoredPerm gamma_min_one_inverse(const ColoredPerm &w)
{
  require_unsigned(w, "gamma_min_one_inverse");
  int const n = w.spec().n(), d = w.spec().d();
  LinearOrder const order = min_one_order(n, d);
  auto cycles = split_at_suffix_records(w.word(), [&order](Letter a, Letter b) { return order.less(a, b); });
  for (auto &c : cycles)
    for (auto &l : c)
      l = min_one_swap(l, n, d);
  return from_cycle_form(CycleForm{w.spec(), std::move(cycles)});
}

ColoredPerm gamma_symmetric(const ColoredPerm &p)
{
  require_signed(p, "gamma_symmetric");
  auto const smaller_value = [](Letter a, Letter b) { return a.value < b.value; };

  std::vector<Cycle> cycles = cycle_decomposition(p).cycles;
  for (auto &c : cycles) {
    if (c.size() > 1)
      for (auto &l : c)
        l = negate_color(l);
    rotate_to_end(c, smaller_value);
  }
  std::sort(cycles.begin(), cycles.end(),
            [&](const Cycle &a, const Cycle &b) { return smaller_value(a.back(), b.back()); });
  return ColoredPerm::from_word(p.spec(), concatenate(cycles));
}

ColoredPerm gamma_symmetric_inverse(const ColoredPerm &w)
{
  require_signed(w, "gamma_symmetric_inverse");
  auto cycles =
      split_at_suffix_records(w.word(), [](Letter a, Letter b) { return a.value < b.value; });
  for (auto &c : cycles)
    if (c.size() > 1)
      for (auto &l : c)
        l = negate_color(l);
  return from_cycle_form(CycleForm{w.spec(), std::move(cycles)});
}

} // namespace permlab
