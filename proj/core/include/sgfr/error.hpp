#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgfr {

enum class Errc {
  EmptyGenerators,
  GcdNotOne,
  NotMember,
  NotIncreasing,
  IsMinimalGenerator,
  WrongShape,
  SearchBudgetExceeded,
  DegenerateSemigroup,
  NotTelescopic,
  HypothesisFailed,
  InvalidParameters,
  IndexBelowConductor,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library. `witness` carries the one number that
// makes the failure actionable: the violating z for HypothesisFailed, the best
// upper bound found for SearchBudgetExceeded.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::int64_t> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(witness) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::int64_t> witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::optional<std::int64_t> witness_;
};

}  // namespace sgfr
