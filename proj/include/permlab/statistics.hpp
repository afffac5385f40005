#ifndef PERMLAB_STATISTICS_HPP
#define PERMLAB_STATISTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "permlab/group.hpp"
#include "permlab/order.hpp"

namespace permlab
{

enum class StatName
{
  ldes,
  lasc,
  lexc,
  bexc,
  des,
  exc,
  des_b,
  exc_b,
  asc_b
};

std::string to_string(StatName s);
StatName parse_stat(const std::string &text);

/// Positions i (1-based; 0 is the virtual zero of signed words) with
/// (pi_i, c_i) >_L (pi_{i+1}, c_{i+1}).
int ldes(const ColoredPerm &p, const LinearOrder &order);
int lasc(const ColoredPerm &p, const LinearOrder &order);

/// |{i : (pi_{pi_i}, c_{pi_i}) >_L (pi_i, c_i)}|. Unsigned groups only.
int lexc(const ColoredPerm &p, const LinearOrder &order);

/// B-excedances under the symmetric order: lexc-type pairs plus fixed points
/// with a negative color. Signed groups only.
int bexc(const ColoredPerm &p);
int bexc(const ColoredPerm &p, const LinearOrder &symmetric);

/// Classical statistics on S_n (Unsigned(1)).
int des(const ColoredPerm &p);
int exc(const ColoredPerm &p);

/// Type B statistics on signed permutations (Signed(1)); des_b compares the
/// signed integers with pi_0 = 0.
int des_b(const ColoredPerm &p);
int exc_b(const ColoredPerm &p);
int asc_b(const ColoredPerm &p);

/// Dispatches on name. When positions is non-null it receives the index set
/// behind the count (1-based; 0 denotes the virtual zero slot).
///
/// The order is required for ldes, lasc and lexc and ignored otherwise.
int evaluate(StatName name, const ColoredPerm &p, const LinearOrder *order = nullptr,
             std::vector<int> *positions = nullptr);

/// Throws unsupported_operation when name cannot be evaluated on spec.
void require_compatible(StatName name, const GroupSpec &spec);

} // namespace permlab

#endif // PERMLAB_STATISTICS_HPP
