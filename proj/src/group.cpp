#include "permlab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "permlab/error.hpp"

namespace permlab
{

namespace
{

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    return std::numeric_limits<std::uint64_t>::max();
  return r;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp)
{
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i)
    r = saturating_mul(r, base);
  return r;
}

std::uint64_t saturating_factorial(int n)
{
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i)
    r = saturating_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

void check_shape(int n, int d)
{
  if (n < 1)
    throw invalid_input("word length n must be >= 1, got " + std::to_string(n));
  if (d < 1)
    throw invalid_input("color parameter d must be >= 1, got " + std::to_string(d));
}

} // namespace

GroupSpec GroupSpec::unsigned_colors(int n, int d)
{
  check_shape(n, d);
  return GroupSpec(n, ColorKind::Unsigned, d);
}

GroupSpec GroupSpec::signed_colors(int n, int d)
{
  check_shape(n, d);
  return GroupSpec(n, ColorKind::Signed, d);
}

bool GroupSpec::has_color(int c) const noexcept
{
  if (is_signed())
    return c != 0 && c >= -d_ && c <= d_;
  return c >= 0 && c < d_;
}

std::vector<int> GroupSpec::colors() const
{
  std::vector<int> out;
  out.reserve(color_count());
  for (int i = 0; i < color_count(); ++i)
    out.push_back(color_at(i));
  return out;
}

int GroupSpec::color_index(int c) const noexcept
{
  if (!is_signed())
    return c;
  return c < 0 ? c + d_ : c + d_ - 1;
}

int GroupSpec::color_at(int index) const noexcept
{
  if (!is_signed())
    return index;
  return index < d_ ? index - d_ : index - d_ + 1;
}

std::string to_string(const GroupSpec &spec)
{
  std::ostringstream os;
  os << (spec.is_signed() ? "Signed(" : "Unsigned(") << spec.d() << "), n=" << spec.n();
  return os.str();
}

std::uint64_t group_order(const GroupSpec &spec)
{
  return saturating_mul(saturating_factorial(spec.n()),
                        saturating_pow(static_cast<std::uint64_t>(spec.color_count()), spec.n()));
}

std::uint64_t class_order(const GroupSpec &spec)
{
  return saturating_mul(saturating_factorial(spec.n() - 1),
                        saturating_pow(static_cast<std::uint64_t>(spec.color_count()), spec.n() - 1));
}

std::string to_string(Letter l)
{
  return std::to_string(l.value) + "_" + std::to_string(l.color);
}

ColoredPerm::ColoredPerm(GroupSpec spec, std::vector<int> values, std::vector<int> colors)
: spec_(spec), values_(std::move(values)), colors_(std::move(colors))
{
  int const n = spec_.n();
  if (static_cast<int>(values_.size()) != n || static_cast<int>(colors_.size()) != n) {
    throw invalid_input("expected " + std::to_string(n) + " values and colors, got " +
                        std::to_string(values_.size()) + " and " + std::to_string(colors_.size()));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw invalid_input("values are not a permutation of [" + std::to_string(n) + "]");
    seen[v] = true;
  }
  for (int c : colors_) {
    if (!spec_.has_color(c))
      throw invalid_input("color " + std::to_string(c) + " is not in the color set of " +
                          to_string(spec_));
  }
}

ColoredPerm ColoredPerm::from_word(GroupSpec spec, std::span<const Letter> word)
{
  std::vector<int> values, colors;
  values.reserve(word.size());
  colors.reserve(word.size());
  for (Letter l : word) {
    values.push_back(l.value);
    colors.push_back(l.color);
  }
  return ColoredPerm(spec, std::move(values), std::move(colors));
}

ColoredPerm ColoredPerm::identity(GroupSpec spec)
{
  std::vector<int> values(spec.n());
  std::iota(values.begin(), values.end(), 1);
  return ColoredPerm(spec, std::move(values), std::vector<int>(spec.n(), spec.neutral_color()));
}

std::vector<Letter> ColoredPerm::word() const
{
  std::vector<Letter> w;
  w.reserve(values_.size());
  for (int i = 0; i < size(); ++i)
    w.push_back(letter(i));
  return w;
}

ColoredPerm make_perm(std::vector<int> values, std::vector<int> colors, const GroupSpec &spec)
{
  return ColoredPerm(spec, std::move(values), std::move(colors));
}

std::string to_string(const ColoredPerm &p)
{
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i)
      out += ' ';
    out += to_string(p.letter(i));
  }
  return out;
}

std::string to_string(const CycleForm &cf)
{
  std::string out;
  for (const auto &cycle : cf.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out += ' ';
      out += to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

CycleForm cycle_decomposition(const ColoredPerm &p)
{
  int const n = p.size();
  // position of value v in the word, so value v carries c_{pi^{-1}(v)}
  std::vector<int> where(n + 1);
  for (int i = 0; i < n; ++i)
    where[p.value(i)] = i;

  CycleForm cf{p.spec(), {}};
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start])
      continue;
    std::vector<Letter> cycle;
    for (int v = start; !seen[v]; v = p.value(v - 1)) {
      seen[v] = true;
      cycle.push_back({v, p.color(where[v])});
    }
    cf.cycles.push_back(std::move(cycle));
  }
  return cf;
}

ColoredPerm from_cycle_form(const CycleForm &cf)
{
  int const n = cf.spec.n();
  std::vector<int> values(n, 0), colors(n, 0);
  std::vector<bool> seen(n + 1, false);
  for (const auto &cycle : cf.cycles) {
    if (cycle.empty())
      throw invalid_input("empty cycle in cycle form");
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int const v = cycle[k].value;
      if (v < 1 || v > n || seen[v])
        throw invalid_input("cycle values do not partition [" + std::to_string(n) + "]");
      seen[v] = true;
      // pi(v) is the next entry, which sits at position v with its own color
      Letter const next = cycle[(k + 1) % cycle.size()];
      values[v - 1] = next.value;
      colors[v - 1] = next.color;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[v])
      throw invalid_input("cycle values do not partition [" + std::to_string(n) + "]");
  }
  return ColoredPerm(cf.spec, std::move(values), std::move(colors));
}

ColoredPerm reverse(const ColoredPerm &p)
{
  if (p.spec().is_signed())
    throw unsupported_operation("reverse is only defined on unsigned colored permutations");
  std::vector<int> values(p.values().rbegin(), p.values().rend());
  std::vector<int> colors(p.colors().rbegin(), p.colors().rend());
  return ColoredPerm(p.spec(), std::move(values), std::move(colors));
}

std::uint64_t rank(const ColoredPerm &p)
{
  int const n = p.size();
  auto const k = static_cast<std::uint64_t>(p.spec().color_count());

  std::uint64_t perm_rank = 0;
  std::vector<bool> used(n + 1, false);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 1; v < p.value(i); ++v)
      smaller += used[v] ? 0 : 1;
    used[p.value(i)] = true;
    perm_rank = perm_rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }

  std::uint64_t color_rank = 0;
  for (int i = 0; i < n; ++i)
    color_rank = color_rank * k + static_cast<std::uint64_t>(p.spec().color_index(p.color(i)));

  return perm_rank * saturating_pow(k, n) + color_rank;
}

ColoredPerm unrank(const GroupSpec &spec, std::uint64_t index)
{
  if (index >= group_order(spec))
    throw invalid_input("rank " + std::to_string(index) + " outside the group");
  int const n = spec.n();
  auto const k = static_cast<std::uint64_t>(spec.color_count());
  std::uint64_t const block = saturating_pow(k, n);
  std::uint64_t perm_rank = index / block;
  std::uint64_t color_rank = index % block;

  std::vector<int> colors(n);
  for (int i = n - 1; i >= 0; --i) {
    colors[i] = spec.color_at(static_cast<int>(color_rank % k));
    color_rank /= k;
  }

  // Lehmer digits, most significant first
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    auto const base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(perm_rank % base);
    perm_rank /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) {
    values[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return ColoredPerm(ColoredPerm::unchecked_t{}, spec, std::move(values), std::move(colors));
}

std::uint64_t default_element_cap()
{
  constexpr std::uint64_t fallback = 100'000'000;
  if (const char *env = std::getenv("PERMLAB_MAX_ELEMENTS")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return fallback;
}

std::vector<Letter> first_letters(const GroupSpec &spec)
{
  std::vector<Letter> out;
  for (int v = 1; v <= spec.n(); ++v)
    for (int c : spec.colors())
      out.push_back({v, c});
  return out;
}

ElementRange enumerate(const GroupSpec &spec, std::uint64_t cap)
{
  std::uint64_t const size = group_order(spec);
  if (size > cap) {
    throw size_limit_exceeded(to_string(spec) + " has " + std::to_string(size) +
                              " elements, above the enumeration cap of " + std::to_string(cap));
  }
  return ElementRange(spec, false, {}, size);
}

ElementRange first_letter_class(const GroupSpec &spec, Letter first, std::uint64_t cap)
{
  if (first.value < 1 || first.value > spec.n() || !spec.has_color(first.color))
    throw invalid_input("letter " + to_string(first) + " is not in the alphabet of " + to_string(spec));
  std::uint64_t const size = class_order(spec);
  if (size > cap) {
    throw size_limit_exceeded("first-letter class of " + to_string(spec) + " has " +
                              std::to_string(size) + " elements, above the enumeration cap of " +
                              std::to_string(cap));
  }
  return ElementRange(spec, true, first, size);
}

ElementRange::iterator::iterator(const ElementRange &range)
{
  GroupSpec const &spec = range.spec_;
  int const n = spec.n();
  palette_ = spec.colors();
  start_ = range.fixed_ ? 1 : 0;

  std::vector<int> values;
  values.reserve(n);
  if (range.fixed_)
    values.push_back(range.first_.value);
  for (int v = 1; v <= n; ++v)
    if (!range.fixed_ || v != range.first_.value)
      values.push_back(v);

  std::vector<int> colors(n, palette_.front());
  if (range.fixed_)
    colors[0] = range.first_.color;
  color_digits_.assign(n, 0);

  current_.emplace(ColoredPerm(ColoredPerm::unchecked_t{}, spec, std::move(values), std::move(colors)));
  done_ = false;
}

ElementRange::iterator &ElementRange::iterator::operator++()
{
  auto &values = current_->values_;
  auto &colors = current_->colors_;
  int const n = static_cast<int>(values.size());
  int const k = static_cast<int>(palette_.size());

  for (int pos = n - 1; pos >= start_; --pos) {
    if (color_digits_[pos] + 1 < k) {
      colors[pos] = palette_[++color_digits_[pos]];
      return *this;
    }
    color_digits_[pos] = 0;
    colors[pos] = palette_[0];
  }
  if (!std::next_permutation(values.begin() + start_, values.end()))
    done_ = true;
  return *this;
}

} // namespace permlab
