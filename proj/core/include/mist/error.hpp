#pragma once

#include <stdexcept>
#include <string>

namespace mist {

enum class ErrorKind {
  kInput,          // malformed files, unknown ids, bad arguments
  kInfeasible,     // terminals or endpoints not connected
  kBudgetExceeded, // exact search ran out of labels
  kInternal,       // a solver produced output violating its own invariants
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error InputError(const std::string& what) {
  return Error(ErrorKind::kInput, what);
}

inline Error InfeasibleError(const std::string& what) {
  return Error(ErrorKind::kInfeasible, what);
}

}  // namespace mist
