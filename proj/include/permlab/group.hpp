#ifndef PERMLAB_GROUP_HPP
#define PERMLAB_GROUP_HPP

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permlab
{

enum class ColorKind
{
  Unsigned, // colors {0, ..., d-1}
  Signed    // colors {-d, ..., -1, 1, ..., d}, words carry a virtual leading 0
};

/// Shape of a colored permutation group: word length n and the color set.
///
/// Unsigned(d) is the wreath product S_n wr Z_d with colors 0..d-1.
/// Signed(d) is the zero-prefixed group with 2d colors +-1..+-d; Signed(1)
/// is the hyperoctahedral group of signed permutations.
class GroupSpec
{
public:
  static GroupSpec unsigned_colors(int n, int d);
  static GroupSpec signed_colors(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  ColorKind kind() const noexcept { return kind_; }
  bool is_signed() const noexcept { return kind_ == ColorKind::Signed; }

  /// d for Unsigned, 2d for Signed.
  int color_count() const noexcept { return is_signed() ? 2 * d_ : d_; }
  bool has_color(int c) const noexcept;

  /// Colors in ascending integer order.
  std::vector<int> colors() const;
  int color_index(int c) const noexcept;
  int color_at(int index) const noexcept;

  /// Default color of a letter: 0 (Unsigned) or +1 (Signed).
  int neutral_color() const noexcept { return is_signed() ? 1 : 0; }

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;

private:
  GroupSpec(int n, ColorKind kind, int d)
  : n_(n), kind_(kind), d_(d)
  {}

  int n_;
  ColorKind kind_;
  int d_;
};

std::string to_string(const GroupSpec &spec);

/// n! * |colors|^n, saturating at UINT64_MAX.
std::uint64_t group_order(const GroupSpec &spec);

/// Size of each first-letter class: (n-1)! * |colors|^(n-1).
std::uint64_t class_order(const GroupSpec &spec);

/// A letter (value, color). The virtual zero of signed words is {0, 0}.
struct Letter
{
  int value = 0;
  int color = 0;

  friend auto operator<=>(const Letter &, const Letter &) = default;
};

inline constexpr Letter zero_letter{0, 0};

std::string to_string(Letter l);

class ElementRange;

/// A colored permutation pi x c stored as its one-line word.
///
/// Positions are 0-based in this API; values are 1..n. Signed words never
/// store the virtual leading zero.
class ColoredPerm
{
public:
  /// Validates that values is a permutation of [n] and every color lies in
  /// the spec's color set. Throws invalid_input.
  ColoredPerm(GroupSpec spec, std::vector<int> values, std::vector<int> colors);

  static ColoredPerm from_word(GroupSpec spec, std::span<const Letter> word);
  static ColoredPerm identity(GroupSpec spec);

  const GroupSpec &spec() const noexcept { return spec_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }

  std::span<const int> values() const noexcept { return values_; }
  std::span<const int> colors() const noexcept { return colors_; }

  int value(int pos) const { return values_[pos]; }
  int color(int pos) const { return colors_[pos]; }
  Letter letter(int pos) const { return {values_[pos], colors_[pos]}; }

  /// The letter sitting at position pi_i, i.e. (pi_{pi_i}, c_{pi_i}).
  Letter image_letter(int pos) const
  {
    int const at = values_[pos] - 1;
    return {values_[at], colors_[at]};
  }

  std::vector<Letter> word() const;

  friend bool operator==(const ColoredPerm &a, const ColoredPerm &b)
  {
    return a.spec_ == b.spec_ && a.values_ == b.values_ && a.colors_ == b.colors_;
  }

  /// Lexicographic on (values, colors); only meaningful within one spec.
  friend std::strong_ordering operator<=>(const ColoredPerm &a, const ColoredPerm &b)
  {
    if (auto c = a.values_ <=> b.values_; c != 0)
      return c;
    return a.colors_ <=> b.colors_;
  }

private:
  struct unchecked_t {};
  ColoredPerm(unchecked_t, GroupSpec spec, std::vector<int> values, std::vector<int> colors)
  : spec_(spec), values_(std::move(values)), colors_(std::move(colors))
  {}

  friend class ElementRange;
  friend ColoredPerm unrank(const GroupSpec &, std::uint64_t);

  GroupSpec spec_;
  std::vector<int> values_;
  std::vector<int> colors_;
};

ColoredPerm make_perm(std::vector<int> values, std::vector<int> colors, const GroupSpec &spec);

/// "2_0 4_1 1_3"; signed colors print with their sign ("2_-1").
std::string to_string(const ColoredPerm &p);

/// Cycle decomposition where value v carries its word color c_{pi^{-1}(v)},
/// so consecutive entries are (pi_i, c_i) -> (pi_{pi_i}, c_{pi_i}).
struct CycleForm
{
  GroupSpec spec;
  std::vector<std::vector<Letter>> cycles;

  friend bool operator==(const CycleForm &, const CycleForm &) = default;
};

std::string to_string(const CycleForm &cf);

/// Canonical form: each cycle starts at its smallest value, cycles ordered by
/// that value.
CycleForm cycle_decomposition(const ColoredPerm &p);

/// Inverse of cycle_decomposition; accepts any rotation and cycle order.
/// Throws invalid_input when the cycle values do not partition [n].
ColoredPerm from_cycle_form(const CycleForm &cf);

/// Reverses values and colors. Unsigned groups only.
ColoredPerm reverse(const ColoredPerm &p);

/// Position of p in the lexicographic (values, colors) enumeration.
std::uint64_t rank(const ColoredPerm &p);
ColoredPerm unrank(const GroupSpec &spec, std::uint64_t index);

/// Element cap for exhaustive enumeration: PERMLAB_MAX_ELEMENTS if set,
/// otherwise 10^8.
std::uint64_t default_element_cap();

/// Every letter (i, j) that can start a word, in lexicographic order.
std::vector<Letter> first_letters(const GroupSpec &spec);

/// Input range over a group, or over one first-letter class S_(i,j), in
/// lexicographic (values, colors) order.
class ElementRange
{
public:
  class iterator
  {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ColoredPerm;
    using difference_type = std::ptrdiff_t;
    using pointer = const ColoredPerm *;
    using reference = const ColoredPerm &;

    iterator() = default;

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator &operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator &a, std::default_sentinel_t) { return a.done_; }

  private:
    friend class ElementRange;
    iterator(const ElementRange &range);

    std::optional<ColoredPerm> current_;
    std::vector<int> color_digits_;
    std::vector<int> palette_;
    int start_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(*this); }
  std::default_sentinel_t end() const { return {}; }

  std::uint64_t size() const noexcept { return size_; }
  const GroupSpec &spec() const noexcept { return spec_; }

private:
  friend ElementRange enumerate(const GroupSpec &, std::uint64_t);
  friend ElementRange first_letter_class(const GroupSpec &, Letter, std::uint64_t);

  ElementRange(GroupSpec spec, bool fixed, Letter first, std::uint64_t size)
  : spec_(spec), fixed_(fixed), first_(first), size_(size)
  {}

  GroupSpec spec_;
  bool fixed_;
  Letter first_;
  std::uint64_t size_;
};

/// Every group element exactly once. Throws size_limit_exceeded when the
/// group is larger than cap.
ElementRange enumerate(const GroupSpec &spec, std::uint64_t cap = default_element_cap());

/// Elements with pi_1 = first.value and c_1 = first.color.
ElementRange first_letter_class(const GroupSpec &spec, Letter first,
                                std::uint64_t cap = default_element_cap());

} // namespace permlab

#endif // PERMLAB_GROUP_HPP
