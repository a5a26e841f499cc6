#pragma once

#include <stdexcept>
#include <string>

namespace xturan {

enum class ErrorKind {
  InvalidParameter,
  InvalidInput,
  NotDegenerate,
  Unsupported,
  BudgetExceeded,
  ResampleExhausted,
  StepBudget,
  EmptySelection,
  Regime,
  Overflow,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidParameter, what);
}

}  // namespace xturan
