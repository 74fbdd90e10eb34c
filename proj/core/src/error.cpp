#include "abeldim/error.hpp"

namespace abeldim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::VertexMismatch: return "VertexMismatch";
    case ErrorCode::EmptyBox: return "EmptyBox";
    case ErrorCode::BoxTooLarge: return "BoxTooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SupportEnumerationTooLarge: return "SupportEnumerationTooLarge";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::DisconnectedSupport: return "DisconnectedSupport";
    case ErrorCode::NonIntegralShift: return "NonIntegralShift";
    case ErrorCode::NotInLipmanCone: return "NotInLipmanCone";
    case ErrorCode::InconsistentOracle: return "InconsistentOracle";
    case ErrorCode::OracleDomainViolation: return "OracleDomainViolation";
    case ErrorCode::SOutOfRange: return "SOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace abeldim
