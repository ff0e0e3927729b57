#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>

#include "format.hpp"
#include "secant/conics.hpp"
#include "secant/engine.hpp"
#include "secant/error.hpp"
#include "secant/mercator.hpp"
#include "secant/trig_parser.hpp"

namespace secant::cli {

namespace {

using nlohmann::json;

// Bad flag values that CLI11 cannot catch on its own.
struct UsageError {
  std::string message;
};

json error_json(const Error& e) { return {{"error", e.what()}, {"code", to_string(e.code())}}; }

json integer_json(const BigInt& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError{flag + ": " + e.what()};
  }
}

std::optional<ParameterKind> parse_kind(const std::string& s) {
  if (s == "t") return ParameterKind::T;
  if (s == "s") return ParameterKind::S;
  if (s == "u") return ParameterKind::U;
  if (s == "v") return ParameterKind::V;
  return std::nullopt;
}

const char* kind_name(ParameterKind k) {
  switch (k) {
    case ParameterKind::T: return "t";
    case ParameterKind::S: return "s";
    case ParameterKind::U: return "u";
    case ParameterKind::V: return "v";
  }
  return "";
}

json failures_json(const IntegrationReport& report) {
  json list = json::array();
  for (const auto& f : report.failures) {
    list.push_back({{"method", to_string(f.method)}, {"code", to_string(f.code)}, {"message", f.message}});
  }
  return list;
}

bool looks_like_option(const std::string& arg) {
  if (arg.size() < 2 || arg[0] != '-') return false;
  if (arg == "-h") return true;
  return arg[1] == '-';
}

bool takes_value(const std::string& arg) {
  return arg.rfind("--", 0) == 0 && arg.find('=') == std::string::npos && arg != "--numeric" &&
         arg != "--help" && arg != "--";
}

// An expression such as "-sec(x)" would otherwise be read as a short flag.
// A leading space keeps CLI11 from treating it as one; the parser skips it.
std::vector<std::string> protect_negative_expressions(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  bool after_separator = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool is_value = i > 0 && takes_value(args[i - 1]);
    if (!after_separator && !is_value && a.size() > 1 && a[0] == '-' && !looks_like_option(a)) {
      out.push_back(" " + a);
    } else {
      out.push_back(a);
    }
    after_separator = after_separator || a == "--";
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

struct IntegrateOptions {
  std::string method = "auto";
  std::vector<double> domain;
  std::size_t samples = 25;
  std::string expr;
};

int do_integrate(const IntegrateOptions& o, std::ostream& out) {
  const auto method = parse_method(o.method);
  if (!method) throw UsageError{"--method: unknown method '" + o.method + "'"};
  VerificationDomain dom;
  if (!o.domain.empty()) {
    if (o.domain.size() != 2 || !(o.domain[0] < o.domain[1])) {
      throw UsageError{"--domain: expected LO,HI with LO < HI"};
    }
    dom.lo = o.domain[0];
    dom.hi = o.domain[1];
  }
  if (o.samples == 0) throw UsageError{"--samples: must be positive"};
  dom.samples = o.samples;

  const IntegrationReport report = integrate_trig(trim(o.expr), *method, dom);
  json j{{"input", report.input}, {"requested", to_string(report.requested)}};
  if (report.ok()) {
    j["method"] = to_string(report.method);
    j["antiderivative"] = format_antiderivative(*report.antiderivative);
    j["max_rel_error"] = report.verification->max_rel_error;
    j["domain"] = {report.verification->lo, report.verification->hi};
    j["samples"] = report.verification->samples;
    j["failures"] = failures_json(report);
    out << j.dump() << '\n';
    return kExitOk;
  }
  const PipelineFailure& first = report.failures.front();
  j["error"] = report.failures.size() == 1 ? first.message : "all methods failed";
  j["code"] = to_string(report.failures.size() == 1 ? first.code : Errc::NotApplicable);
  j["failures"] = failures_json(report);
  if (report.failures.size() > 1) j.erase("code");
  out << j.dump() << '\n';
  return kExitDomainError;
}

int do_verify_logderiv(const std::string& f_text, const std::string& u_text, std::ostream& out) {
  const TrigRational f = parse_trig(trim(f_text));
  const TrigRational u = parse_trig(trim(u_text));
  json j{{"f", f.to_string()}, {"u", u.to_string()}, {"holds", verify_log_derivative(f, u)}};
  out << j.dump() << '\n';
  return kExitOk;
}

int do_param(const std::string& curve, const std::string& value_text, std::ostream& out) {
  const Rational value = parse_rational_flag("--value", value_text);
  RationalPoint p = curve == "circle-b"   ? circle_from_B(value)
                    : curve == "circle-d" ? circle_from_D(value)
                                          : hyperbola_from_Pplus(value);
  json j{{"curve", curve},
         {"value", value.to_string()},
         {"x", p.x().to_string()},
         {"y", p.y().to_string()},
         {"x_approx", p.x().to_double()},
         {"y_approx", p.y().to_double()}};
  out << j.dump() << '\n';
  return kExitOk;
}

int do_triples(long max_z, std::ostream& out) {
  json list = json::array();
  for (const auto& t : enumerate_primitive_triples(max_z)) {
    list.push_back({integer_json(t.x()), integer_json(t.y()), integer_json(t.z())});
  }
  out << list.dump() << '\n';
  return kExitOk;
}

int do_convert(const std::string& from, const std::string& to, const std::string& value_text,
               std::ostream& out) {
  const auto from_kind = parse_kind(from);
  const auto to_kind = parse_kind(to);
  const Rational value = parse_rational_flag("--value", value_text);
  const ConicParameter result = param_convert({*from_kind, value}, *to_kind);
  json j{{"from", kind_name(*from_kind)},
         {"to", kind_name(*to_kind)},
         {"value", value.to_string()},
         {"result", result.value.to_string()},
         {"result_approx", result.value.to_double()}};
  out << j.dump() << '\n';
  return kExitOk;
}

struct MercatorOptions {
  double lat = 0.0;
  double lon = 0.0;
  bool numeric = false;
  double tol = 1e-10;
  double scale = 1.0;
};

int do_mercator(const MercatorOptions& o, std::ostream& out) {
  json j{{"lat", o.lat}, {"lon", o.lon}};
  if (o.numeric) {
    const double y = mercator_y_numeric(o.lat, o.tol);
    j["method"] = "numeric";
    j["tol"] = o.tol;
    j["x"] = o.scale * o.lon;
    j["y"] = o.scale * y;
  } else {
    const MapPoint p = project({o.lon, o.lat}, o.scale);
    j["method"] = "closed-form";
    j["x"] = p.x;
    j["y"] = p.y;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact integration of rational trigonometric expressions, conic parametrizations "
               "and Mercator ordinates",
               "secant"};
  app.require_subcommand(1, 1);

  IntegrateOptions integrate;
  auto* integrate_cmd = app.add_subcommand("integrate", "Integrate a rational expression in sin/cos");
  integrate_cmd->add_option("--method", integrate.method,
                            "auto, gregory, barrow, weierstrass or modified-weierstrass")
      ->capture_default_str();
  integrate_cmd->add_option("--domain", integrate.domain, "Verification interval LO,HI")
      ->delimiter(',')
      ->expected(2);
  integrate_cmd->add_option("--samples", integrate.samples, "Verification sample count")
      ->capture_default_str();
  integrate_cmd->add_option("expr", integrate.expr, "Integrand, e.g. \"sec(x)\"")->required();

  std::string f_text, u_text;
  auto* logderiv_cmd = app.add_subcommand("verify-logderiv", "Check f == u'/u exactly");
  logderiv_cmd->add_option("f", f_text, "Candidate log-derivative")->required();
  logderiv_cmd->add_option("u", u_text, "Function whose log is differentiated")->required();

  std::string curve, param_value;
  auto* param_cmd = app.add_subcommand("param", "Rational point on the circle or hyperbola");
  param_cmd->add_option("--curve", curve, "circle-b, circle-d or hyperbola")
      ->required()
      ->check(CLI::IsMember({"circle-b", "circle-d", "hyperbola"}));
  param_cmd->add_option("--value", param_value, "Parameter P/Q")->required();

  long max_hypotenuse = 0;
  auto* triples_cmd = app.add_subcommand("triples", "Primitive Pythagorean triples");
  triples_cmd->add_option("--max-hypotenuse", max_hypotenuse, "Largest Z")
      ->required()
      ->check(CLI::Range(1L, std::numeric_limits<long>::max()));

  std::string from, to, convert_value;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between t, s, u and v");
  const auto kinds = CLI::IsMember({"t", "s", "u", "v"});
  convert_cmd->add_option("--from", from, "Source parameter kind")->required()->check(kinds);
  convert_cmd->add_option("--to", to, "Target parameter kind")->required()->check(kinds);
  convert_cmd->add_option("--value", convert_value, "Parameter P/Q")->required();

  MercatorOptions mercator;
  auto* mercator_cmd = app.add_subcommand("mercator", "Project a point with Mercator's map");
  mercator_cmd->add_option("--lat", mercator.lat, "Latitude in radians")->required();
  mercator_cmd->add_option("--lon", mercator.lon, "Longitude in radians")->required();
  auto* numeric_flag = mercator_cmd->add_flag("--numeric", mercator.numeric, "Use adaptive Simpson quadrature");
  mercator_cmd->add_option("--tol", mercator.tol, "Quadrature tolerance")->needs(numeric_flag);
  mercator_cmd->add_option("--scale", mercator.scale, "Uniform map scale");

  const std::vector<std::string> protected_args = protect_negative_expressions(args);
  std::vector<std::string> reversed(protected_args.rbegin(), protected_args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (integrate_cmd->parsed()) return do_integrate(integrate, out);
    if (logderiv_cmd->parsed()) return do_verify_logderiv(f_text, u_text, out);
    if (param_cmd->parsed()) return do_param(curve, param_value, out);
    if (triples_cmd->parsed()) return do_triples(max_hypotenuse, out);
    if (convert_cmd->parsed()) return do_convert(from, to, convert_value, out);
    if (mercator_cmd->parsed()) return do_mercator(mercator, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    out << error_json(e).dump() << '\n';
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace secant::cli
