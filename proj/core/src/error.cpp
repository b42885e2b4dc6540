#include "legfront/error.hpp"

namespace legfront {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::UnbalancedClosure: return "UnbalancedClosure";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::SameComponent: return "SameComponent";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::InapplicableMove: return "InapplicableMove";
    case ErrorCode::DuplicateHandle: return "DuplicateHandle";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

Error Error::syntax(const std::string& message, std::size_t line,
                    std::size_t column) {
  Error e(ErrorCode::SyntaxError,
          "line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message);
  e.line_ = line;
  e.column_ = column;
  return e;
}

}  // namespace legfront
