#ifndef PERMLAB_ORDER_HPP
#define PERMLAB_ORDER_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permlab/group.hpp"

namespace permlab
{

/// The letters a group's words are written in: [n] x [d]_0 for unsigned
/// groups, {0} u [n] x (+-[d]) for signed ones.
class Alphabet
{
public:
  explicit Alphabet(const GroupSpec &spec)
  : n_(spec.n()), d_(spec.d()), signed_(spec.is_signed())
  {}

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  bool is_signed() const noexcept { return signed_; }

  /// n*d (unsigned) or 1 + 2*n*d (signed).
  int size() const noexcept { return signed_ ? 1 + 2 * n_ * d_ : n_ * d_; }

  bool contains(Letter l) const noexcept;

  /// Canonical index in [0, size()): signed alphabets put the zero letter
  /// first, then value-major, colors ascending.
  int index(Letter l) const noexcept;
  Letter letter(int index) const noexcept;

  /// All letters in canonical index order.
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
  int n_;
  int d_;
  bool signed_;
};

std::string to_string(const Alphabet &a);

/// A total order on an alphabet, stored as an explicit rank table.
class LinearOrder
{
public:
  const Alphabet &alphabet() const noexcept { return alphabet_; }

  int rank(Letter l) const noexcept { return rank_[alphabet_.index(l)]; }

  /// Letters from smallest to largest.
  std::span<const Letter> ascending() const noexcept { return by_rank_; }

  bool less(Letter a, Letter b) const noexcept { return rank(a) < rank(b); }
  bool greater(Letter a, Letter b) const noexcept { return rank(a) > rank(b); }

  /// Throws invalid_input for letters outside the alphabet.
  std::strong_ordering compare(Letter a, Letter b) const;

  /// Builds an order from a listing of every letter, smallest first. Throws
  /// invalid_input on duplicates or missing letters.
  static LinearOrder from_ranking(const Alphabet &alphabet, std::span<const Letter> ascending);

private:
  LinearOrder(Alphabet alphabet, std::vector<int> rank, std::vector<Letter> by_rank)
  : alphabet_(alphabet), rank_(std::move(rank)), by_rank_(std::move(by_rank))
  {}

  Alphabet alphabet_;
  std::vector<int> rank_; // indexed by Alphabet::index
  std::vector<Letter> by_rank_;
};

/// 1_0 < ... < n_0 < 1_1 < ... < n_1 < ... < n_{d-1}.
LinearOrder color_major_order(int n, int d);

/// 1_0 < 1_1 < ... < 1_{d-1} < 2_0 < ... < n_0 < 2_1 < ... < n_{d-1}.
LinearOrder min_one_order(int n, int d);

/// n_{-d} < ... < n_{-1} < (n-1)_{-d} < ... < 1_{-1} < 0 < 1_1 < ... < 1_d < ... < n_d.
/// At d = 1 this is the integer order on [-n, n].
LinearOrder symmetric_order(int n, int d);

/// Closed form of symmetric_order's rank, usable without building the table.
inline int symmetric_rank(Letter l, int n, int d) noexcept
{
  if (l.color < 0)
    return (n - l.value) * d + (l.color + d);
  if (l.value == 0)
    return n * d;
  return n * d + 1 + (l.value - 1) * d + (l.color - 1);
}

LinearOrder order_from_ranking(std::span<const Letter> ascending, const Alphabet &alphabet);

/// Uniformly random order, a pure function of the seed.
///
/// Fisher-Yates over Alphabet::letters(): for i = size-1 down to 1, swap
/// slot i with slot j, where j is drawn uniformly from [0, i] by rejection
/// sampling on std::mt19937_64(seed) output (draws >= the largest multiple of
/// i+1 are discarded, then j = draw mod (i+1)). The resulting listing is
/// read smallest-first.
LinearOrder random_order(const Alphabet &alphabet, std::uint64_t seed);
LinearOrder random_order(int n, int d, std::uint64_t seed);

/// Parses "color-major", "min-one", "symmetric", "random:<seed>" or
/// "list:<v.c>,<v.c>,..." (smallest first; the zero letter is "0").
LinearOrder parse_order(const std::string &text, const GroupSpec &spec);

} // namespace permlab

#endif // PERMLAB_ORDER_HPP
