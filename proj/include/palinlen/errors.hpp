#pragma once

#include <stdexcept>
#include <string>

namespace palinlen {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside an operation's mathematical domain: an undefined
/// complement, a forbidden digit, a violated precondition.
class DomainError : public Error {
  using Error::Error;
};

/// Request exceeds a configured size limit.
class ResourceLimitError : public Error {
  using Error::Error;
};

/// Two internal routes produced inconsistent values; indicates a bug,
/// never a valid state.
class InternalError : public Error {
  using Error::Error;
};

}  // namespace palinlen
