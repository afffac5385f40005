#ifndef PERMLAB_ERROR_HPP
#define PERMLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace permlab
{

// Malformed words, letters outside an alphabet, out-of-range indices.
class invalid_input : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Operation not defined for the given kind of group (e.g. bexc on an
// unsigned group, reverse on a zero-prefixed word).
class unsupported_operation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

// Exhaustive enumeration would exceed the configured element cap.
class size_limit_exceeded : public std::length_error
{
public:
  using std::length_error::length_error;
};

} // namespace permlab

#endif // PERMLAB_ERROR_HPP
