#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdiff {

enum class Errc {
  InvalidArgument,
  NotPrime,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  CharTwoUnsupported,
  LeadingCoeffZero,
  WrongCharacteristic,
  BudgetExceeded,
  Inapplicable,
  Overflow,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace cdiff
