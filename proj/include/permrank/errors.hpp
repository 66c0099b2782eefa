#pragma once

#include <stdexcept>

namespace permrank {

/// Malformed or out-of-contract input (bad indices, wrong shape, parse failure).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size or enumeration cap was exceeded; the exact answer was not attempted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permrank
