#ifndef PERMLAB_DISTRIBUTION_HPP
#define PERMLAB_DISTRIBUTION_HPP

#include <optional>

#include "permlab/group.hpp"
#include "permlab/order.hpp"
#include "permlab/poly.hpp"
#include "permlab/statistics.hpp"

namespace permlab
{

/// Sum of t^stat(p) over the group, or over S_(i,j) when first is given.
/// order is needed for ldes, lasc and lexc. Throws unsupported_operation for
/// a stat the spec cannot carry, size_limit_exceeded past cap.
IntPoly stat_polynomial(const GroupSpec &spec, StatName stat, const LinearOrder *order = nullptr,
                        std::optional<Letter> first = std::nullopt,
                        std::uint64_t cap = default_element_cap());

} // namespace permlab

#endif // PERMLAB_DISTRIBUTION_HPP
