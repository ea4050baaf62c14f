#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlab {

enum class ErrorKind {
  InvalidConstruction,
  TypeMismatch,
  NotMultClosed,
  AxiomViolation,
  CapExceeded,
  NotADomain,
  UnknownLaw,
  UnknownElement,
  SyntaxError,
  NameError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries a kind so callers (the
/// script executor in particular) can map it onto exit codes and reports.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace ringlab
