#ifndef RIBBON_ERROR_HPP
#define RIBBON_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbon {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using DartId = std::int32_t;

inline constexpr DartId kNoDart = -1;

enum class ErrorCode {
  InvalidInput,
  SelfLoop,
  Disconnected,
  RotationMismatch,
  UnknownVertex,
  UnknownEdge,
  NotATree,
  NotACycle,
  VertexNotOnCycle,
  TooLarge,
  CapExceeded,
  DegreeMismatch,
  ChipAtExcludedRoot,
  CycleMismatch,
  // The remaining codes signal an implementation bug rather than bad data.
  PeriodViolation,
  NotReached,
  InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ribbon

#endif  // RIBBON_ERROR_HPP
