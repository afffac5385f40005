#include "permlab/order.hpp"

#include <limits>
#include <random>
#include <sstream>

#include "permlab/error.hpp"

namespace permlab
{

bool Alphabet::contains(Letter l) const noexcept
{
  if (signed_) {
    if (l.value == 0)
      return l.color == 0;
    return l.value >= 1 && l.value <= n_ && l.color != 0 && l.color >= -d_ && l.color <= d_;
  }
  return l.value >= 1 && l.value <= n_ && l.color >= 0 && l.color < d_;
}

int Alphabet::index(Letter l) const noexcept
{
  if (!signed_)
    return (l.value - 1) * d_ + l.color;
  if (l.value == 0)
    return 0;
  int const color_index = l.color < 0 ? l.color + d_ : l.color + d_ - 1;
  return 1 + (l.value - 1) * 2 * d_ + color_index;
}

Letter Alphabet::letter(int index) const noexcept
{
  if (!signed_)
    return {index / d_ + 1, index % d_};
  if (index == 0)
    return zero_letter;
  int const i = index - 1;
  int const ci = i % (2 * d_);
  return {i / (2 * d_) + 1, ci < d_ ? ci - d_ : ci - d_ + 1};
}

std::vector<Letter> Alphabet::letters() const
{
  std::vector<Letter> out;
  out.reserve(size());
  for (int i = 0; i < size(); ++i)
    out.push_back(letter(i));
  return out;
}

std::string to_string(const Alphabet &a)
{
  std::ostringstream os;
  if (a.is_signed())
    os << "{0} u [" << a.n() << "] x +-[" << a.d() << "]";
  else
    os << "[" << a.n() << "] x [" << a.d() << "]_0";
  return os.str();
}

std::strong_ordering LinearOrder::compare(Letter a, Letter b) const
{
  if (!alphabet_.contains(a) || !alphabet_.contains(b))
    throw invalid_input("letter outside the alphabet " + to_string(alphabet_));
  return rank(a) <=> rank(b);
}

LinearOrder LinearOrder::from_ranking(const Alphabet &alphabet, std::span<const Letter> ascending)
{
  int const size = alphabet.size();
  if (static_cast<int>(ascending.size()) != size) {
    throw invalid_input("ranking lists " + std::to_string(ascending.size()) + " letters, alphabet " +
                        to_string(alphabet) + " has " + std::to_string(size));
  }
  std::vector<int> rank(size, -1);
  for (int r = 0; r < size; ++r) {
    Letter const l = ascending[r];
    if (!alphabet.contains(l))
      throw invalid_input("letter " + to_string(l) + " is not in " + to_string(alphabet));
    int &slot = rank[alphabet.index(l)];
    if (slot != -1)
      throw invalid_input("letter " + to_string(l) + " listed twice");
    slot = r;
  }
  return LinearOrder(alphabet, std::move(rank),
                     std::vector<Letter>(ascending.begin(), ascending.end()));
}

LinearOrder order_from_ranking(std::span<const Letter> ascending, const Alphabet &alphabet)
{
  return LinearOrder::from_ranking(alphabet, ascending);
}

LinearOrder color_major_order(int n, int d)
{
  Alphabet const a(GroupSpec::unsigned_colors(n, d));
  std::vector<Letter> list;
  list.reserve(a.size());
  for (int c = 0; c < d; ++c)
    for (int v = 1; v <= n; ++v)
      list.push_back({v, c});
  return LinearOrder::from_ranking(a, list);
}

LinearOrder min_one_order(int n, int d)
{
  Alphabet const a(GroupSpec::unsigned_colors(n, d));
  std::vector<Letter> list;
  list.reserve(a.size());
  for (int c = 0; c < d; ++c)
    list.push_back({1, c});
  for (int c = 0; c < d; ++c)
    for (int v = 2; v <= n; ++v)
      list.push_back({v, c});
  return LinearOrder::from_ranking(a, list);
}

LinearOrder symmetric_order(int n, int d)
{
  Alphabet const a(GroupSpec::signed_colors(n, d));
  std::vector<Letter> list;
  list.reserve(a.size());
  for (int v = n; v >= 1; --v)
    for (int c = -d; c <= -1; ++c)
      list.push_back({v, c});
  list.push_back(zero_letter);
  for (int v = 1; v <= n; ++v)
    for (int c = 1; c <= d; ++c)
      list.push_back({v, c});
  return LinearOrder::from_ranking(a, list);
}

LinearOrder random_order(const Alphabet &alphabet, std::uint64_t seed)
{
  std::mt19937_64 gen(seed);
  auto bounded = [&gen](std::uint64_t bound) {
    // uniform on [0, bound)
    std::uint64_t const limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = gen();
    } while (x >= limit);
    return x % bound;
  };

  std::vector<Letter> list = alphabet.letters();
  for (std::size_t i = list.size(); i-- > 1;) {
    auto const j = static_cast<std::size_t>(bounded(i + 1));
    std::swap(list[i], list[j]);
  }
  return LinearOrder::from_ranking(alphabet, list);
}

LinearOrder random_order(int n, int d, std::uint64_t seed)
{
  return random_order(Alphabet(GroupSpec::unsigned_colors(n, d)), seed);
}

namespace
{

Letter parse_letter(const std::string &token)
{
  if (token == "0")
    return zero_letter;
  auto const dot = token.find('.');
  if (dot == std::string::npos)
    throw invalid_input("order letter '" + token + "' is not of the form value.color");
  try {
    std::size_t used_v = 0, used_c = 0;
    int const v = std::stoi(token.substr(0, dot), &used_v);
    int const c = std::stoi(token.substr(dot + 1), &used_c);
    if (used_v != dot || used_c != token.size() - dot - 1)
      throw invalid_input("trailing characters");
    return {v, c};
  } catch (const std::logic_error &) {
    throw invalid_input("order letter '" + token + "' is not of the form value.color");
  }
}

} // namespace

LinearOrder parse_order(const std::string &text, const GroupSpec &spec)
{
  if (text == "color-major") {
    if (spec.is_signed())
      throw unsupported_operation("the color-major order is defined on unsigned alphabets");
    return color_major_order(spec.n(), spec.d());
  }
  if (text == "min-one") {
    if (spec.is_signed())
      throw unsupported_operation("the min-one order is defined on unsigned alphabets");
    return min_one_order(spec.n(), spec.d());
  }
  if (text == "symmetric") {
    if (!spec.is_signed())
      throw unsupported_operation("the symmetric order is defined on signed alphabets");
    return symmetric_order(spec.n(), spec.d());
  }
  if (text.rfind("random:", 0) == 0) {
    std::string const seed = text.substr(7);
    try {
      std::size_t used = 0;
      unsigned long long const s = std::stoull(seed, &used);
      if (used != seed.size())
        throw invalid_input("bad seed");
      return random_order(Alphabet(spec), s);
    } catch (const std::logic_error &) {
      throw invalid_input("bad random order seed '" + seed + "'");
    }
  }
  if (text.rfind("list:", 0) == 0) {
    std::vector<Letter> list;
    std::istringstream is(text.substr(5));
    std::string token;
    while (std::getline(is, token, ','))
      list.push_back(parse_letter(token));
    return LinearOrder::from_ranking(Alphabet(spec), list);
  }
  throw invalid_input("unknown order '" + text + "' (expected color-major, min-one, symmetric, "
                      "random:<seed> or list:<letters>)");
}

} // namespace permlab
