#pragma once

#include <stdexcept>
#include <string>

namespace polestrata {

enum class Errc {
  MalformedSignature,
  MalformedDatum,
  Disconnected,
  NonPositiveRealPart,
  AngleNotMultipleOf2Pi,
  EulerMismatch,
  NotTwoSimplePoles,
  GenusZero,
  NotGenusOne,
  NotClosed,
  NotSimple,
  IndexNotInteger,
  SpinUndefined,
  OutOfRange,
  BudgetExceeded,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedSignature: return "MalformedSignature";
    case Errc::MalformedDatum: return "MalformedDatum";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonPositiveRealPart: return "NonPositiveRealPart";
    case Errc::AngleNotMultipleOf2Pi: return "AngleNotMultipleOf2Pi";
    case Errc::EulerMismatch: return "EulerMismatch";
    case Errc::NotTwoSimplePoles: return "NotTwoSimplePoles";
    case Errc::GenusZero: return "GenusZero";
    case Errc::NotGenusOne: return "NotGenusOne";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotSimple: return "NotSimple";
    case Errc::IndexNotInteger: return "IndexNotInteger";
    case Errc::SpinUndefined: return "SpinUndefined";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Internal: return "Internal";
  }
  return "?";
}

// Breaches of internal consistency, as opposed to bad input.
inline bool is_internal(Errc c) {
  return c == Errc::AngleNotMultipleOf2Pi || c == Errc::EulerMismatch ||
         c == Errc::IndexNotInteger || c == Errc::Internal;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace polestrata
