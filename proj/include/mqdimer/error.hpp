#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mqdimer {

enum class ErrorCode {
  NotHermitian,
  SpectrumNotReal,
  BadSubsystemId,
  NotAState,
  InvalidParams,
  NonRealIntensity,
  NotUnitVector,
  InvalidConfig,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SpectrumNotReal: return "SpectrumNotReal";
    case ErrorCode::BadSubsystemId: return "BadSubsystemId";
    case ErrorCode::NotAState: return "NotAState";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonRealIntensity: return "NonRealIntensity";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mqdimer
