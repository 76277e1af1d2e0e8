#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class Errc {
  EmptyGenerators,
  ZeroGenerator,
  NonCoprime,
  GeneratorTooLarge,
  NotASemigroup,
  NotAnElement,
  FullSemigroup,
  IndexOutOfRange,
  AlphaOutOfRange,
  GenusBoundTooLarge,
  InvalidArgument,
  RecordInconsistent,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::ZeroGenerator: return "ZeroGenerator";
    case Errc::NonCoprime: return "NonCoprime";
    case Errc::GeneratorTooLarge: return "GeneratorTooLarge";
    case Errc::NotASemigroup: return "NotASemigroup";
    case Errc::NotAnElement: return "NotAnElement";
    case Errc::FullSemigroup: return "FullSemigroup";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::GenusBoundTooLarge: return "GenusBoundTooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::RecordInconsistent: return "RecordInconsistent";
  }
  return "Unknown";
}

/// Every precondition violation in the library surfaces as this exception.
/// `code()` identifies the violated contract; `what()` carries a readable
/// diagnostic that the CLI prints verbatim.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nsg
