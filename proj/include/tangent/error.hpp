#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tangent {

enum class Errc {
  InvalidCharacter,
  LengthOutOfRange,
  NotDesubstitutable,
  EmptyWord,
  NoInnerRun,
  CapExceeded,
  ChainViolation,
  DomainError,
  ParityViolation,
  InsufficientData,
  NotPrimitive,
  NoInteriorPoint,
  CornerHit,
  NonMonotone,
  TooManyCornerHits,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `code()` identifies the contract
/// violated; `what()` carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

class InvalidCharacter : public Error {
 public:
  explicit InvalidCharacter(std::size_t position)
      : Error(Errc::InvalidCharacter,
              "character at position " + std::to_string(position) +
                  " is not '0' or '1'"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tangent
