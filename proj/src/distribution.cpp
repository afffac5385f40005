#include "permlab/distribution.hpp"

#include "permlab/error.hpp"
#include "permlab/kernels.hpp"

namespace permlab
{

IntPoly stat_polynomial(const GroupSpec &spec, StatName stat, const LinearOrder *order,
                        std::optional<Letter> first, std::uint64_t cap)
{
  require_compatible(stat, spec);
  bool const needs_order = stat == StatName::ldes || stat == StatName::lasc || stat == StatName::lexc;
  if (needs_order && order == nullptr)
    throw invalid_input(to_string(stat) + " needs a linear order");
  if (order != nullptr && !(order->alphabet() == Alphabet(spec)))
    throw invalid_input("order is over a different alphabet");

  kernels::StatFn const fn = [&](const ColoredPerm &p) { return evaluate(stat, p, order); };
  if (!first)
    return from_counts(kernels::histogram_parallel(spec, fn, cap));

  kernels::Histogram h;
  for (const auto &p : first_letter_class(spec, *first, cap)) {
    auto const v = static_cast<std::size_t>(fn(p));
    if (v >= h.size())
      h.resize(v + 1, 0);
    ++h[v];
  }
  return from_counts(h);
}

} // namespace permlab
