#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rooks/cell.hpp"

namespace rooks {

enum class ErrorKind {
  OutOfBoard,
  AttackingRooks,
  SizeMismatch,
  BoardTooSmall,
  InvalidPermutation,
  NotInvolution,
  InvalidScalars,
  NotInvertible,
  NotUpperTriangular,
  WrongBoardSize,
  BoundViolation,
  UndefinedMove,
  NotIndexed,
  LimitExceeded,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<Cell> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Cell>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Cell> witness_;
};

}  // namespace rooks
