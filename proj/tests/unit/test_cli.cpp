#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "cli/cli.hpp"
#include "cli/format.hpp"
#include "corpus.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "secant/engine.hpp"

using namespace secant;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = cli::kExitOk) {
  const Outcome o = run_cli(args);
  EXPECT_EQ(o.code, expected_code) << o.out << o.err;
  return json::parse(o.out);
}

}  // namespace

TEST(Format, Examples) {
  const auto g = integrate_trig("sec(x)", Method::Gregory);
  EXPECT_EQ(cli::format_antiderivative(*g.antiderivative), "ln|sec(x)+tan(x)| + C");
  const auto b = integrate_trig("sec(x)", Method::Barrow);
  EXPECT_EQ(cli::format_antiderivative(*b.antiderivative), "1/2*ln|1+sin(x)| - 1/2*ln|1-sin(x)| + C");
  EXPECT_EQ(cli::format_antiderivative(Antiderivative{"u", {}}), "0 + C");
  EXPECT_EQ(cli::format_antiderivative(TrigAntiderivative{"x", {}}), "0 + C");
}

TEST(Format, Deterministic) {
  for (const std::string& text : check::integrand_corpus()) {
    const auto a = integrate_trig(text, Method::Auto);
    const auto b = integrate_trig(text, Method::Auto);
    if (!a.ok()) continue;
    EXPECT_EQ(cli::format_antiderivative(*a.antiderivative), cli::format_antiderivative(*b.antiderivative));
  }
}

TEST(Format, TextRoundTrip) {
  constexpr Method methods[] = {Method::Gregory, Method::ModifiedWeierstrass, Method::Barrow, Method::Weierstrass};
  int checked = 0;
  for (const std::string& text : check::integrand_corpus()) {
    for (Method m : methods) {
      const auto r = integrate_trig(text, m);
      if (!r.ok()) continue;
      const std::string formatted = cli::format_antiderivative(*r.antiderivative);
      for (int i = 0; i < 10; ++i) {
        const double x = -1.2 + i * 0.27;
        const double structured = evaluate(*r.antiderivative, x);
        const double reread = check::evaluate_antiderivative_text(formatted, x);
        EXPECT_NEAR(reread, structured, 1e-10 * std::max(1.0, std::abs(structured))) << formatted << " at " << x;
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 60);
}

TEST(Cli, IntegrateGregorySecant) {
  const json j = run_json({"integrate", "--method", "gregory", "sec(x)"});
  EXPECT_EQ(j["method"], "gregory");
  EXPECT_EQ(j["requested"], "gregory");
  EXPECT_EQ(j["antiderivative"], "ln|sec(x)+tan(x)| + C");
  EXPECT_LT(j["max_rel_error"].get<double>(), 1e-6);
  EXPECT_NEAR(j["domain"][0].get<double>(), -1.4708, 1e-4);
  EXPECT_NEAR(j["domain"][1].get<double>(), 1.4708, 1e-4);
  EXPECT_EQ(j["samples"], 25);
}

TEST(Cli, IntegrateDefaultsToAuto) {
  const json j = run_json({"integrate", "sec(x)"});
  EXPECT_EQ(j["requested"], "auto");
  EXPECT_EQ(j["method"], "gregory");
}

TEST(Cli, IntegrateOptions) {
  const json j = run_json({"integrate", "--domain=-1,1", "--samples", "7", "--method", "barrow", "tan(x)"});
  EXPECT_EQ(j["domain"], json::array({-1.0, 1.0}));
  EXPECT_EQ(j["samples"], 7);
  EXPECT_EQ(run_cli({"integrate", "--domain", "1,-1", "sec(x)"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"integrate", "--method", "euler", "sec(x)"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"integrate", "--samples", "0", "sec(x)"}).code, cli::kExitUsage);
}

TEST(Cli, IntegrateDomainErrors) {
  const json w = run_json({"integrate", "--method", "weierstrass", "1/(2+cos(x))"}, cli::kExitDomainError);
  EXPECT_EQ(w["code"], "IrrationalAtanScale");
  EXPECT_TRUE(w.contains("error"));
  const json s = run_json({"integrate", "sec(x"}, cli::kExitDomainError);
  EXPECT_TRUE(s.contains("error"));
}

TEST(Cli, LeadingMinusExpressions) {
  const json j = run_json({"integrate", "-sec(x)"});
  EXPECT_EQ(j["input"], "-sec(x)");
  EXPECT_EQ(j["antiderivative"], "-ln|sec(x)+tan(x)| + C");
  EXPECT_EQ(run_json({"integrate", "--", "-sec(x)"})["input"], "-sec(x)");
  EXPECT_EQ(run_json({"verify-logderiv", "-tan(x)", "cos(x)"})["holds"], true);
  EXPECT_EQ(run_json({"param", "--curve", "circle-b", "--value", "-1/2"})["y"], "-4/5");
  EXPECT_EQ(run_cli({"integrate", "-z", "sec(x)"}).code, cli::kExitUsage);
}

TEST(Cli, VerifyLogDerivative) {
  EXPECT_EQ(run_json({"verify-logderiv", "sec(x)", "sec(x)+tan(x)"})["holds"], true);
  EXPECT_EQ(run_json({"verify-logderiv", "sec(x)", "sec(x)"})["holds"], false);
  EXPECT_EQ(run_json({"verify-logderiv", "sec(x)", "0"}, cli::kExitDomainError)["code"], "InvalidArgument");
}

TEST(Cli, Param) {
  const json j = run_json({"param", "--curve", "circle-b", "--value", "1/2"});
  EXPECT_EQ(j["x"], "3/5");
  EXPECT_EQ(j["y"], "4/5");
  EXPECT_EQ(run_json({"param", "--curve", "hyperbola", "--value", "2"})["x"], "5/4");
  EXPECT_EQ(run_json({"param", "--curve", "hyperbola", "--value", "0"}, cli::kExitDomainError)["code"],
            "ZeroParameter");
  EXPECT_EQ(run_cli({"param", "--curve", "ellipse", "--value", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"param", "--curve", "circle-b", "--value", "a/b"}).code, cli::kExitUsage);
}

TEST(Cli, Triples) {
  EXPECT_EQ(run_json({"triples", "--max-hypotenuse", "13"}), json::parse("[[3,4,5],[5,12,13]]"));
  EXPECT_EQ(run_json({"triples", "--max-hypotenuse", "100"}).size(), 16u);
  EXPECT_EQ(run_cli({"triples", "--max-hypotenuse", "0"}).code, cli::kExitUsage);
}

TEST(Cli, Convert) {
  EXPECT_EQ(run_json({"convert", "--from", "t", "--to", "s", "--value", "1/2"})["result"], "3");
  EXPECT_EQ(run_json({"convert", "--from", "u", "--to", "v", "--value", "3"})["result"], "3/2");
  EXPECT_EQ(run_json({"convert", "--from", "t", "--to", "s", "--value", "1"}, cli::kExitDomainError)["code"],
            "PoleInConversion");
  EXPECT_EQ(run_cli({"convert", "--from", "w", "--to", "s", "--value", "1"}).code, cli::kExitUsage);
}

TEST(Cli, Mercator) {
  const json j = run_json({"mercator", "--lat", "0", "--lon", "0.3"});
  EXPECT_EQ(j["x"], 0.3);
  EXPECT_EQ(j["y"], 0.0);
  const json n = run_json({"mercator", "--lat", "1.0471975511965976", "--lon", "1", "--numeric"});
  EXPECT_NEAR(n["y"].get<double>(), 1.3169578969248166, 1e-9);
  const json neg = run_json({"mercator", "--lat", "-0.5", "--lon", "0"});
  EXPECT_LT(neg["y"].get<double>(), 0.0);
  EXPECT_EQ(run_json({"mercator", "--lat", "1.6", "--lon", "0"}, cli::kExitDomainError)["code"],
            "LatitudeOutOfRange");
  EXPECT_EQ(run_cli({"mercator", "--lat", "0", "--lon", "0", "--tol", "1e-8"}).code, cli::kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  const Outcome unknown = run_cli({"triples", "--max-hypotenuse", "5", "--bogus"});
  EXPECT_EQ(unknown.code, cli::kExitUsage);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

TEST(CliProperty, ValidJsonForRandomValidFlags) {
  check::Gen g(111);
  const std::vector<std::string> methods = {"auto", "gregory", "barrow", "weierstrass", "modified-weierstrass"};
  const std::vector<std::string> curves = {"circle-b", "circle-d", "hyperbola"};
  const std::vector<std::string> kinds = {"t", "s", "u", "v"};
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> args;
    switch (g.integer(0, 5)) {
      case 0:
        args = {"integrate", "--method", methods[g.integer(0, 4)], "--samples", std::to_string(g.integer(1, 40)),
                g.expression(2)};
        break;
      case 1:
        args = {"verify-logderiv", g.expression(2), g.expression(2)};
        break;
      case 2:
        args = {"param", "--curve", curves[g.integer(0, 2)], "--value", g.rational(9, 9).to_string()};
        break;
      case 3:
        args = {"triples", "--max-hypotenuse", std::to_string(g.integer(1, 200))};
        break;
      case 4:
        args = {"convert", "--from", kinds[g.integer(0, 3)], "--to", kinds[g.integer(0, 3)], "--value",
                g.rational(9, 9).to_string()};
        break;
      default:
        args = {"mercator", "--lat", std::to_string(g.real(-1.8, 1.8)), "--lon", std::to_string(g.real(-3, 3))};
        if (g.coin()) {
          args.push_back("--numeric");
          args.push_back("--tol");
          args.push_back("1e-9");
        }
    }
    const Outcome o = run_cli(args);
    ASSERT_NE(o.code, cli::kExitUsage) << o.err;
    json j;
    ASSERT_NO_THROW(j = json::parse(o.out)) << o.out;
    if (o.code == cli::kExitDomainError) {
      EXPECT_TRUE(j.contains("error")) << o.out;
    }
  }
}
