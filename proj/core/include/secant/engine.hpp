#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secant/antiderivative.hpp"
#include "secant/error.hpp"
#include "secant/substitution.hpp"
#include "secant/trig_rational.hpp"
#include "secant/verify.hpp"

namespace secant {

enum class Method { Gregory, ModifiedWeierstrass, Barrow, Weierstrass, Auto };

std::string_view to_string(Method m);
/// "gregory", "modified-weierstrass", "barrow", "weierstrass", "auto".
std::optional<Method> parse_method(std::string_view name);

struct Verification {
  std::size_t samples;
  double lo;
  double hi;
  double max_rel_error;
};

struct PipelineFailure {
  Method method;
  Errc code;
  std::string message;
};

struct IntegrationReport {
  std::string input;
  Method requested = Method::Auto;
  /// The method that produced `antiderivative`; equals `requested` unless Auto.
  Method method = Method::Auto;
  std::optional<TrigAntiderivative> antiderivative;
  std::optional<Verification> verification;
  /// Per-method failures, in the order the methods were tried.
  std::vector<PipelineFailure> failures;

  bool ok() const { return antiderivative.has_value(); }
};

/// Substitute, integrate, back-substitute and verify numerically. A result
/// whose derivative check exceeds kDefaultTolerance counts as a failure
/// (Errc::VerificationFailed). Auto runs Gregory, ModifiedWeierstrass,
/// Barrow, Weierstrass and keeps the verified result with the fewest terms,
/// earlier methods winning ties.
IntegrationReport integrate_trig(const TrigRational& r, Method method,
                                 const VerificationDomain& dom = {}, std::string input = {});

/// Parses `text` first; parse errors are recorded as a failure of `method`.
IntegrationReport integrate_trig(std::string_view text, Method method,
                                 const VerificationDomain& dom = {});

}  // namespace secant
