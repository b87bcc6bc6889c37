#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace llab {

enum class ErrorCode {
  DivisionByZero,
  UnsupportedField,
  AmbientMismatch,
  InconsistentDegrees,
  DegreeOutOfRange,
  ResampleExhausted,
  FieldTooSmall,
  NotEnoughCurves,
  ConfigInvalid,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::InconsistentDegrees: return "InconsistentDegrees";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ResampleExhausted: return "ResampleExhausted";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotEnoughCurves: return "NotEnoughCurves";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace llab
