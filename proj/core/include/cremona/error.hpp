#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorCode {
  ZeroDenominator,
  ZeroInput,
  SquareInput,
  ZeroScale,
  DegenerateTriple,
  TooSmallConfiguration,
  IrrationalPoints,
  WrongSize,
  NotAlgebraic,
  NotInAnisotropicTorus,
  SquareF,
  BothZero,
  CocycleViolation,
  NoGoodBasePoint,
  NotInjectiveOnBase,
  ArityMismatch,
  BadDependence,
  UnsupportedArity,
  BadF,
  SyntaxError,
  UnknownCommand,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for every module; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parser failures carry the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cremona
