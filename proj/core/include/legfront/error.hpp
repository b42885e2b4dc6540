#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace legfront {

enum class ErrorCode {
  EmptyWord,
  PositionOutOfRange,
  UnbalancedClosure,
  UnknownComponent,
  SameComponent,
  NotAKnot,
  InapplicableMove,
  DuplicateHandle,
  SyntaxError,
  InvalidGrid,
  MalformedCode,
  TooLarge,
  InternalConsistency,
  Io,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every domain failure. `index` is the 1-based
// event index for validation errors; `line`/`column` are set by the parsers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

  static Error syntax(const std::string& message, std::size_t line,
                      std::size_t column);

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

}  // namespace legfront
