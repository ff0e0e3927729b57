#include "secant/mercator.hpp"

#include <cmath>
#include <vector>

#include "secant/error.hpp"

namespace secant {

namespace {

void check_latitude(double lat, double limit) {
  if (!(std::abs(lat) < limit)) {
    throw Error(Errc::LatitudeOutOfRange,
                "latitude " + std::to_string(lat) + " is too close to a pole");
  }
}

double sec(double x) { return 1.0 / std::cos(x); }

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

double mercator_y(double lat) {
  check_latitude(lat, kClosedFormLatLimit);
  return std::asinh(std::tan(lat));  // ln(sec + tan), odd by construction
}

double mercator_y_numeric(double lat, double tol) {
  check_latitude(lat, kNumericLatLimit);
  if (!(tol >= 1e-13 && tol <= 1e-3)) {
    throw Error(Errc::InvalidArgument, "tolerance must lie in [1e-13, 1e-3]");
  }
  if (lat == 0.0) return 0.0;

  const double a = 0.0;
  const double b = lat;
  const double fa = sec(a);
  const double fb = sec(b);
  const double fm = sec(0.5 * (a + b));
  std::vector<Panel> stack{{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol}};
  double sum = 0.0;
  long panels = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double flm = sec(0.5 * (p.a + m));
    const double frm = sec(0.5 * (m + p.b));
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * p.tol) {
      sum += left + right + delta / 15.0;
      ++panels;
    } else {
      stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol});
      stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol});
    }
    if (panels + static_cast<long>(stack.size()) > kMaxSimpsonPanels) {
      throw Error(Errc::ToleranceNotMet, "adaptive Simpson exceeded the panel cap");
    }
  }
  return sum;
}

MapPoint project(const GeoPoint& g, double scale) {
  return {scale * g.lon, scale * mercator_y(g.lat)};
}

double conformality_ratio(double lat, double h) {
  if (!(h >= 1e-8 && h <= 1e-2)) throw Error(Errc::InvalidArgument, "h must lie in [1e-8, 1e-2]");
  check_latitude(std::abs(lat) + h, kNumericLatLimit);
  const double dy = (mercator_y(lat + h) - mercator_y(lat - h)) / (2.0 * h);
  return dy / sec(lat);
}

}  // namespace secant
