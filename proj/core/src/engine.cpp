#include "secant/engine.hpp"

#include <array>
#include <sstream>

#include "secant/rational_integration.hpp"
#include "secant/trig_parser.hpp"

namespace secant {

namespace {

SubstitutionName substitution_for(Method m) {
  switch (m) {
    case Method::Gregory: return SubstitutionName::Gregory;
    case Method::ModifiedWeierstrass: return SubstitutionName::ModifiedWeierstrass;
    case Method::Barrow: return SubstitutionName::Barrow;
    case Method::Weierstrass: return SubstitutionName::Weierstrass;
    case Method::Auto: break;
  }
  throw Error(Errc::InvalidArgument, "auto is not a substitution");
}

struct Attempt {
  TrigAntiderivative antiderivative;
  Verification verification;
};

Attempt run_method(const TrigRational& r, Method m, const VerificationDomain& dom) {
  const Substitution& sub = substitution(substitution_for(m));
  const SubstitutionResult substituted = apply_substitution(r, sub);
  const Antiderivative in_param = integrate_rational(substituted.integrand);
  TrigAntiderivative in_x = back_substitute(in_param, sub);
  const double err = diff_check(in_x, r, dom);
  if (!(err < kDefaultTolerance)) {
    std::ostringstream msg;
    msg << "numeric derivative check failed: max relative error " << err;
    throw Error(Errc::VerificationFailed, msg.str());
  }
  return {std::move(in_x), {dom.samples, dom.lo, dom.hi, err}};
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Gregory: return "gregory";
    case Method::ModifiedWeierstrass: return "modified-weierstrass";
    case Method::Barrow: return "barrow";
    case Method::Weierstrass: return "weierstrass";
    case Method::Auto: return "auto";
  }
  return "";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Gregory, Method::ModifiedWeierstrass, Method::Barrow, Method::Weierstrass,
                   Method::Auto}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

IntegrationReport integrate_trig(const TrigRational& r, Method method, const VerificationDomain& dom,
                                 std::string input) {
  IntegrationReport report;
  report.input = input.empty() ? r.to_string() : std::move(input);
  report.requested = method;
  report.method = method;

  const std::array<Method, 4> order{Method::Gregory, Method::ModifiedWeierstrass, Method::Barrow,
                                    Method::Weierstrass};
  const std::vector<Method> to_try =
      method == Method::Auto ? std::vector<Method>(order.begin(), order.end()) : std::vector<Method>{method};

  for (Method m : to_try) {
    try {
      Attempt a = run_method(r, m, dom);
      if (!report.antiderivative || a.antiderivative.terms.size() < report.antiderivative->terms.size()) {
        report.method = m;
        report.antiderivative = std::move(a.antiderivative);
        report.verification = a.verification;
      }
    } catch (const Error& e) {
      report.failures.push_back({m, e.code(), e.what()});
    }
  }
  return report;
}

IntegrationReport integrate_trig(std::string_view text, Method method, const VerificationDomain& dom) {
  TrigRational r;
  try {
    r = parse_trig(text);
  } catch (const Error& e) {
    IntegrationReport report;
    report.input = std::string(text);
    report.requested = method;
    report.method = method;
    report.failures.push_back({method, e.code(), e.what()});
    return report;
  }
  return integrate_trig(r, method, dom, std::string(text));
}

}  // namespace secant
