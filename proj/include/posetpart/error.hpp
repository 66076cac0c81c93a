#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posetpart {

enum class ErrorCode {
  duplicate_label,
  unknown_label,
  cycle_detected,
  zero_size,
  too_large,
  size_mismatch,
  not_a_quasiorder,
  not_a_partial_order,
  not_an_extension,
  empty_block,
  overlapping_blocks,
  incomplete_cover,
  missing_assignment,
  conflicting_assignment,
  not_order_preserving,
  not_surjective,
  bound_exceeded,
  internal_invariant_violation,
  syntax_error,
  unknown_block_name,
  unknown_poset,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. Errors that originate from text input
// carry the 1-based line number they refer to.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  // Same error, attributed to an input line.
  Error at_line(std::size_t line) const;

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::string message_;
};

}  // namespace posetpart
