#include "posetpart/error.hpp"

namespace posetpart {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::zero_size: return "ZeroSize";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::not_a_quasiorder: return "NotAQuasiorder";
    case ErrorCode::not_a_partial_order: return "NotAPartialOrder";
    case ErrorCode::not_an_extension: return "NotAnExtension";
    case ErrorCode::empty_block: return "EmptyBlock";
    case ErrorCode::overlapping_blocks: return "OverlappingBlocks";
    case ErrorCode::incomplete_cover: return "IncompleteCover";
    case ErrorCode::missing_assignment: return "MissingAssignment";
    case ErrorCode::conflicting_assignment: return "ConflictingAssignment";
    case ErrorCode::not_order_preserving: return "NotOrderPreserving";
    case ErrorCode::not_surjective: return "NotSurjective";
    case ErrorCode::bound_exceeded: return "BoundExceeded";
    case ErrorCode::internal_invariant_violation: return "InternalInvariantViolation";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_block_name: return "UnknownBlockName";
    case ErrorCode::unknown_poset: return "UnknownPoset";
  }
  return "Unknown";
}

namespace {

std::string format(ErrorCode code, const std::string& what, std::optional<std::size_t> line) {
  std::string out;
  if (line) out = "line " + std::to_string(*line) + ": ";
  out += std::string(to_string(code)) + ": " + what;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> line)
    : std::runtime_error(format(code, what, line)), code_(code), line_(line), message_(what) {}

Error Error::at_line(std::size_t line) const { return Error(code_, message_, line); }

}  // namespace posetpart
