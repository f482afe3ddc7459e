#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace greedy_spectra {

enum class ErrorCode {
  RejectEmpty,
  RejectNotRealizable,
  LengthMismatch,
  InvalidBounds,
  Unrealizable,
  RootNotInTree,
  LevelMismatch,
  NotAnEdge,
  InvalidMove,
  AlreadyEqual,
  NotMajorized,
  InvalidTree,
  ParseError,
  CapExceeded,
  NonConvergence,
  MethodDisagreement,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input-validation failures as opposed to internal limits or numerical failures.
constexpr bool is_input_error(ErrorCode code) noexcept {
  return code != ErrorCode::CapExceeded && code != ErrorCode::NonConvergence &&
         code != ErrorCode::MethodDisagreement;
}

}  // namespace greedy_spectra
