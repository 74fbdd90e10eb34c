#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abeldim {

enum class ErrorCode {
  NotATree,
  NotNegativeDefinite,
  DuplicateEdge,
  UnknownVertex,
  VertexMismatch,
  EmptyBox,
  BoxTooLarge,
  NoConvergence,
  SupportEnumerationTooLarge,
  GridTooLarge,
  DisconnectedSupport,
  NonIntegralShift,
  NotInLipmanCone,
  InconsistentOracle,
  OracleDomainViolation,
  SOutOfRange,
  InvalidArgument,
  ParseError,
  CrossCheckFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace abeldim
