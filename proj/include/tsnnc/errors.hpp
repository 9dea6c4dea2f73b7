#pragma once

#include <stdexcept>
#include <string>

namespace tsnnc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation outside a curve's domain (negative time).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Constructor parameters out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on its curve arguments does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A supremum diverges: infinite backlog, delay or output.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// Reserved bandwidth or utilization exceeds what the link offers.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent network model. `where` is a JSON-path-like
/// location such as "flows[2].cmi".
class ModelError : public Error {
 public:
  ModelError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Cyclic port dependency in a network model.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// Model outside the simulator's supported scope.
class ScopeError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsnnc
