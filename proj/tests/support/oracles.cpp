#include "oracles.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace secant::check {

std::vector<std::array<long, 3>> brute_force_triples(long max_z) {
  std::vector<std::array<long, 3>> out;
  for (long z = 1; z <= max_z; ++z) {
    for (long x = 1; x < z; ++x) {
      for (long y = x; y < z; ++y) {
        if (x * x + y * y == z * z && std::gcd(std::gcd(x, y), z) == 1) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double composite_simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

namespace {

class Reader {
 public:
  Reader(const std::string& text, double x) : s_(text), x_(x) {}

  double run() {
    const double v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error(what + " at " + std::to_string(i_) + " in '" + s_ + "'");
  }

  void skip() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    return power();
  }

  double power() {
    const double base = primary();
    if (!eat('^')) return base;
    skip();
    std::size_t used = 0;
    const int e = std::stoi(s_.substr(i_), &used);
    i_ += used;
    return std::pow(base, e);
  }

  double primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t used = 0;
      const double v = std::stod(s_.substr(i_), &used);
      i_ += used;
      return v;
    }
    if (eat('(')) {
      const double v = expr();
      expect(')');
      return v;
    }
    if (eat('|')) {
      const double v = expr();
      expect('|');
      return std::abs(v);
    }
    std::string name;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) name += s_[i_++];
    if (name == "x") return x_;
    if (name == "C") return 0.0;
    if (name == "ln") {
      if (eat('|')) {
        const double v = expr();
        expect('|');
        return std::log(std::abs(v));
      }
      expect('(');
      const double v = expr();
      expect(')');
      return std::log(v);
    }
    expect('(');
    const double a = expr();
    expect(')');
    if (name == "sin") return std::sin(a);
    if (name == "cos") return std::cos(a);
    if (name == "tan") return std::tan(a);
    if (name == "sec") return 1.0 / std::cos(a);
    if (name == "csc") return 1.0 / std::sin(a);
    if (name == "cot") return std::cos(a) / std::sin(a);
    if (name == "atan") return std::atan(a);
    fail("unknown function '" + name + "'");
  }

  const std::string& s_;
  double x_;
  std::size_t i_ = 0;
};

}  // namespace

double evaluate_antiderivative_text(const std::string& text, double x) { return Reader(text, x).run(); }

}  // namespace secant::check
