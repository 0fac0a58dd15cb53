#pragma once

#include <stdexcept>
#include <string>

namespace submax {

// Invalid element ids, malformed specs, bad parameter combinations.
class InvalidArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive routines refuse inputs beyond their enumeration limit.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A constraint admits no solution of the requested kind.
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A guarantee the algorithms rely on was violated at runtime. Seeing this
// means an oracle or a solver state is broken, not that the input is bad.
class InternalInvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace submax
