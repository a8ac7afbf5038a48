#pragma once

#include <stdexcept>
#include <string>

namespace mcc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex ids, self-loops, unparsable files.
class InputError : public Error {
public:
  using Error::Error;
};

/// A caller broke an operation's precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The request is well formed but too large to run (e.g. DP table size).
class ResourceRefusal : public Error {
public:
  using Error::Error;
};

/// An invariant that the mathematics guarantees did not hold. Always a bug
/// report (or a counterexample candidate), never silently ignored.
class InternalError : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public InternalError {
public:
  explicit BudgetExceeded(int budget)
      : InternalError("no co-vertex cover of size <= " + std::to_string(budget) +
                      " exists"),
        budget_(budget) {}

  int budget() const { return budget_; }

private:
  int budget_;
};

} // namespace mcc
