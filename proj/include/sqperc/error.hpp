#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqperc {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  Duplicate,
  EmptyQuerySet,
  InvalidProbability,
  TooLarge,
  NotANonEdge,
  EdgeCapExceeded,
  SquareCapExceeded,
  CapExceeded,
  CompleteGraph,
  InvalidParams,
  OverlapDetected,
  BracketInvalid,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sqperc
