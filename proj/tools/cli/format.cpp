#include "format.hpp"

#include <string_view>
#include <vector>

namespace secant::cli {

namespace {

struct Piece {
  bool negative;
  std::string text;
};

const RationalFunction& source(const RationalFunction& body) { return body; }
const RationalFunction& source(const TrigArgument& body) { return body.source; }
std::string_view parameter_text(const RationalFunction& body) { return body.variable(); }
std::string_view parameter_text(const TrigArgument& body) { return body.parameter_text; }

std::string coefficient_prefix(const Rational& magnitude) {
  return magnitude.is_one() ? std::string() : magnitude.to_string() + "*";
}

template <class Body>
void append_pieces(const Term<Body>& t, std::vector<Piece>& out) {
  const RationalFunction& g = source(t.argument);
  const std::string_view var = parameter_text(t.argument);
  switch (t.kind) {
    case TermKind::Polynomial: {
      const Polynomial& p = g.numerator();
      for (int k = 0; k <= p.degree(); ++k) {
        const Rational c = p.coefficient(k) * t.coefficient;
        if (c.is_zero()) continue;
        out.push_back({c.sign() < 0, render(Polynomial::monomial(c.abs(), k, p.variable()), var)});
      }
      return;
    }
    case TermKind::Rational: {
      RationalFunction h = g * RationalFunction(t.coefficient);
      const bool negative = h.numerator().leading().sign() < 0;
      if (negative) h = -h;
      out.push_back({negative, render(h, var)});
      return;
    }
    case TermKind::Log: {
      const std::string arg = render(g, var);
      const std::string body = t.absolute ? "ln|" + arg + "|" : "ln(" + arg + ")";
      out.push_back({t.coefficient.sign() < 0, coefficient_prefix(t.coefficient.abs()) + body});
      return;
    }
    case TermKind::Atan:
      out.push_back({t.coefficient.sign() < 0,
                     coefficient_prefix(t.coefficient.abs()) + "atan(" + render(g, var) + ")"});
      return;
  }
}

template <class Body>
std::string format_terms(const BasicAntiderivative<Body>& f) {
  std::vector<Piece> pieces;
  for (const auto& t : f.terms) append_pieces(t, pieces);
  if (pieces.empty()) return "0 + C";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].negative) out += "-";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].text;
  }
  return out + " + C";
}

}  // namespace

std::string format_antiderivative(const Antiderivative& f) { return format_terms(f); }
std::string format_antiderivative(const TrigAntiderivative& f) { return format_terms(f); }

}  // namespace secant::cli
