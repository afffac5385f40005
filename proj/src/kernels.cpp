#include "permlab/kernels.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

#include "permlab/error.hpp"

namespace permlab::kernels
{

namespace
{

void add_into(Histogram &acc, const Histogram &h)
{
  if (h.size() > acc.size())
    acc.resize(h.size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    acc[i] += h[i];
}

void bump(Histogram &h, int value)
{
  if (value < 0)
    throw invalid_input("statistic returned a negative value");
  auto const v = static_cast<std::size_t>(value);
  if (v >= h.size())
    h.resize(v + 1, 0);
  ++h[v];
}

Histogram class_histogram(const GroupSpec &spec, Letter first, const StatFn &stat, std::uint64_t cap)
{
  Histogram h;
  for (const auto &p : first_letter_class(spec, first, cap))
    bump(h, stat(p));
  return h;
}

std::optional<ColoredPerm> class_first_failure(const GroupSpec &spec, Letter first,
                                               const Predicate &holds, std::uint64_t cap)
{
  for (const auto &p : first_letter_class(spec, first, cap))
    if (!holds(p))
      return p;
  return std::nullopt;
}

void require_size(const GroupSpec &spec, std::uint64_t cap)
{
  // enumerate() performs the cap check and throws
  (void)enumerate(spec, cap);
}

// Marks image ranks in order; reports the first repeated image.
std::optional<std::pair<ColoredPerm, ColoredPerm>>
first_repeat(const GroupSpec &spec, const std::vector<std::vector<std::uint64_t>> &images,
             const std::vector<Letter> &letters)
{
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> owner(group_order(spec), none);
  for (std::size_t c = 0; c < images.size(); ++c) {
    std::size_t idx = 0;
    for (const auto &p : first_letter_class(spec, letters[c], std::numeric_limits<std::uint64_t>::max())) {
      std::uint64_t const img = images[c][idx++];
      if (owner[img] != none)
        return std::make_pair(unrank(spec, owner[img]), p);
      owner[img] = rank(p);
    }
  }
  return std::nullopt;
}

} // namespace

int thread_count()
{
  return omp_get_max_threads();
}

Histogram histogram_serial(const GroupSpec &spec, const StatFn &stat, std::uint64_t cap)
{
  Histogram h;
  for (const auto &p : enumerate(spec, cap))
    bump(h, stat(p));
  return h;
}

Histogram histogram_parallel(const GroupSpec &spec, const StatFn &stat, std::uint64_t cap)
{
  Histogram total;
  for (const auto &h : class_histograms_parallel(spec, stat, cap))
    add_into(total, h);
  return total;
}

std::vector<Histogram> class_histograms_serial(const GroupSpec &spec, const StatFn &stat,
                                               std::uint64_t cap)
{
  require_size(spec, cap);
  std::vector<Histogram> out;
  for (Letter first : first_letters(spec))
    out.push_back(class_histogram(spec, first, stat, cap));
  return out;
}

std::vector<Histogram> class_histograms_parallel(const GroupSpec &spec, const StatFn &stat,
                                                 std::uint64_t cap)
{
  require_size(spec, cap);
  auto const letters = first_letters(spec);
  auto const count = static_cast<int>(letters.size());
  std::vector<Histogram> out(letters.size());
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < count; ++c) {
    try {
      out[c] = class_histogram(spec, letters[c], stat, cap);
    } catch (...) {
#pragma omp critical(permlab_kernel_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
  return out;
}

Scan scan_serial(const GroupSpec &spec, const Predicate &holds, std::uint64_t cap)
{
  Scan scan;
  for (const auto &p : enumerate(spec, cap)) {
    ++scan.examined;
    if (!scan.first_failure && !holds(p))
      scan.first_failure = p;
  }
  return scan;
}

Scan scan_parallel(const GroupSpec &spec, const Predicate &holds, std::uint64_t cap)
{
  require_size(spec, cap);
  auto const letters = first_letters(spec);
  auto const count = static_cast<int>(letters.size());
  std::vector<std::optional<ColoredPerm>> failures(letters.size());
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < count; ++c) {
    try {
      failures[c] = class_first_failure(spec, letters[c], holds, cap);
    } catch (...) {
#pragma omp critical(permlab_kernel_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);

  Scan scan;
  scan.examined = group_order(spec);
  for (auto &f : failures) {
    if (f && (!scan.first_failure || *f < *scan.first_failure))
      scan.first_failure = std::move(f);
  }
  return scan;
}

std::optional<std::pair<ColoredPerm, ColoredPerm>>
find_collision_serial(const GroupSpec &spec, const Map &map, std::uint64_t cap)
{
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> owner(enumerate(spec, cap).size(), none);
  for (const auto &p : enumerate(spec, cap)) {
    std::uint64_t const img = rank(map(p));
    if (owner[img] != none)
      return std::make_pair(unrank(spec, owner[img]), p);
    owner[img] = rank(p);
  }
  return std::nullopt;
}

std::optional<std::pair<ColoredPerm, ColoredPerm>>
find_collision_parallel(const GroupSpec &spec, const Map &map, std::uint64_t cap)
{
  require_size(spec, cap);
  auto const letters = first_letters(spec);
  auto const count = static_cast<int>(letters.size());
  std::vector<std::vector<std::uint64_t>> images(letters.size());
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < count; ++c) {
    try {
      std::vector<std::uint64_t> local;
      for (const auto &p : first_letter_class(spec, letters[c], cap)) {
        ColoredPerm const img = map(p);
        if (!(img.spec() == spec))
          throw invalid_input("map left the group");
        local.push_back(rank(img));
      }
      images[c] = std::move(local);
    } catch (...) {
#pragma omp critical(permlab_kernel_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
  return first_repeat(spec, images, letters);
}

} // namespace permlab::kernels
