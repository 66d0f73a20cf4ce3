#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcop {

enum class ErrorCode {
  kLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kOrderTooLarge,
  kOrderTooSmall,
  kDisconnected,
  kColoringMismatch,
  kCostGuard,
  kInvalidArgument,
  kNotOnOuterFace,
  kParse,
  kCapExceeded,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoop: return "loop";
    case ErrorCode::kDuplicateEdge: return "duplicate edge";
    case ErrorCode::kVertexOutOfRange: return "vertex out of range";
    case ErrorCode::kOrderTooLarge: return "order too large";
    case ErrorCode::kOrderTooSmall: return "order too small";
    case ErrorCode::kDisconnected: return "disconnected graph";
    case ErrorCode::kColoringMismatch: return "coloring mismatch";
    case ErrorCode::kCostGuard: return "cost guard";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kNotOnOuterFace: return "edge not on outer face";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kCapExceeded: return "cap exceeded";
  }
  return "unknown";
}

// Every failure the library reports carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rcop
