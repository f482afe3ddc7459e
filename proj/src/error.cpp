#include "greedy_spectra/error.hpp"

namespace greedy_spectra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RejectEmpty: return "RejectEmpty";
    case ErrorCode::RejectNotRealizable: return "RejectNotRealizable";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::RootNotInTree: return "RootNotInTree";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::AlreadyEqual: return "AlreadyEqual";
    case ErrorCode::NotMajorized: return "NotMajorized";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
  }
  return "Unknown";
}

}  // namespace greedy_spectra
