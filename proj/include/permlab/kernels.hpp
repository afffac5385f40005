#ifndef PERMLAB_KERNELS_HPP
#define PERMLAB_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "permlab/group.hpp"

namespace permlab::kernels
{

// Exhaustive sweeps over a group. Each kernel has a serial reference and an
// OpenMP version that partitions the group by first letter (one task per
// class S_(i,j)) and merges per-class results in first_letters() order, so
// both produce identical output for any thread count.
//
// Callables must be safe to invoke concurrently.

using Histogram = std::vector<std::uint64_t>;
using StatFn = std::function<int(const ColoredPerm &)>;
using Predicate = std::function<bool(const ColoredPerm &)>;
using Map = std::function<ColoredPerm(const ColoredPerm &)>;

/// Whole-group distribution: entry v counts elements with statistic v.
Histogram histogram_serial(const GroupSpec &spec, const StatFn &stat,
                           std::uint64_t cap = default_element_cap());
Histogram histogram_parallel(const GroupSpec &spec, const StatFn &stat,
                             std::uint64_t cap = default_element_cap());

/// One histogram per first letter, ordered as first_letters(spec).
std::vector<Histogram> class_histograms_serial(const GroupSpec &spec, const StatFn &stat,
                                               std::uint64_t cap = default_element_cap());
std::vector<Histogram> class_histograms_parallel(const GroupSpec &spec, const StatFn &stat,
                                                 std::uint64_t cap = default_element_cap());

struct Scan
{
  std::uint64_t examined = 0;
  /// Lexicographically first element for which the predicate was false.
  std::optional<ColoredPerm> first_failure;
};

Scan scan_serial(const GroupSpec &spec, const Predicate &holds,
                 std::uint64_t cap = default_element_cap());
Scan scan_parallel(const GroupSpec &spec, const Predicate &holds,
                   std::uint64_t cap = default_element_cap());

/// Two distinct elements with the same image, the lexicographically
/// earliest such pair by second element; nullopt when map is injective.
std::optional<std::pair<ColoredPerm, ColoredPerm>>
find_collision_serial(const GroupSpec &spec, const Map &map, std::uint64_t cap = default_element_cap());
std::optional<std::pair<ColoredPerm, ColoredPerm>>
find_collision_parallel(const GroupSpec &spec, const Map &map, std::uint64_t cap = default_element_cap());

/// Number of OpenMP threads the parallel kernels would use.
int thread_count();

} // namespace permlab::kernels

#endif // PERMLAB_KERNELS_HPP
