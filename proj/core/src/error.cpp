#include "secant/error.hpp"

namespace secant {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DenominatorVanishesOnCircle: return "DenominatorVanishesOnCircle";
    case Errc::DenominatorVanishesIdentically: return "DenominatorVanishesIdentically";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::UnsupportedDenominator: return "UnsupportedDenominator";
    case Errc::IrrationalAtanScale: return "IrrationalAtanScale";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::DomainUnusable: return "DomainUnusable";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::PoleInConversion: return "PoleInConversion";
    case Errc::LatitudeOutOfRange: return "LatitudeOutOfRange";
    case Errc::ToleranceNotMet: return "ToleranceNotMet";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(message), code_(code), position_(position) {}

}  // namespace secant
