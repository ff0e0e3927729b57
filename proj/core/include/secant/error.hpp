#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace secant {

enum class Errc {
  SyntaxError,
  ZeroDenominator,
  ZeroPolynomial,
  DenominatorVanishesOnCircle,
  DenominatorVanishesIdentically,
  SingularPoint,
  NotApplicable,
  UnsupportedDenominator,
  IrrationalAtanScale,
  VerificationFailed,
  DomainUnusable,
  ZeroParameter,
  DegenerateParameter,
  PoleInConversion,
  LatitudeOutOfRange,
  ToleranceNotMet,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Every domain failure in the library is reported through this type.
/// `position()` is set for parse errors (0-based byte offset into the input).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace secant
