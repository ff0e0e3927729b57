#include "secant/verify.hpp"

#include <algorithm>
#include <cmath>

#include "secant/error.hpp"

namespace secant {

namespace {

void check_domain(const VerificationDomain& dom) {
  if (!(dom.lo < dom.hi) || dom.samples == 0 || !(dom.step > 0.0)) {
    throw Error(Errc::InvalidArgument, "verification domain needs lo < hi, samples > 0, step > 0");
  }
}

}  // namespace

std::vector<double> sample_grid(const VerificationDomain& dom, double margin,
                                const std::function<bool(double)>& accept) {
  check_domain(dom);
  const double spacing = (dom.hi - dom.lo) / static_cast<double>(dom.samples);
  const double lo = dom.lo + margin;
  const double hi = dom.hi - margin;
  std::vector<double> used;
  used.reserve(dom.samples);
  int rejections = 0;
  for (std::size_t i = 0; i < dom.samples; ++i) {
    const double base = dom.lo + (static_cast<double>(i) + 0.5) * spacing;
    for (int j = 0;; ++j) {
      // 0, +d, -d, +2d, -2d, ... with d a small fraction of the spacing.
      const double magnitude = spacing * 0.49 * static_cast<double>((j + 1) / 2) / 50.0;
      const double x = base + ((j % 2 == 1) ? magnitude : -magnitude);
      bool ok = false;
      if (x >= lo && x <= hi) {
        try {
          ok = accept(x);
        } catch (const Error& e) {
          if (e.code() != Errc::SingularPoint) throw;
        }
      }
      if (ok) {
        used.push_back(x);
        break;
      }
      if (++rejections > kMaxRejections) {
        throw Error(Errc::DomainUnusable,
                    "more than " + std::to_string(kMaxRejections) + " samples rejected near poles");
      }
    }
  }
  return used;
}

double diff_check(const TrigAntiderivative& f, const TrigRational& r, const VerificationDomain& dom) {
  const double h = dom.step;
  double worst = 0.0;
  sample_grid(dom, 2.0 * h, [&](double x) {
    const double expected = r.evaluate(x, kPoleThreshold);
    const double fm2 = evaluate(f, x - 2.0 * h, kPoleThreshold);
    const double fm1 = evaluate(f, x - h, kPoleThreshold);
    const double fp1 = evaluate(f, x + h, kPoleThreshold);
    const double fp2 = evaluate(f, x + 2.0 * h, kPoleThreshold);
    const double approx = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    if (!std::isfinite(approx) || !std::isfinite(expected)) return false;
    worst = std::max(worst, std::abs(approx - expected) / std::max(1.0, std::abs(expected)));
    return true;
  });
  return worst;
}

ConstantDifference constant_difference_check(const TrigAntiderivative& f1, const TrigAntiderivative& f2,
                                             const VerificationDomain& dom) {
  std::vector<double> diffs;
  sample_grid(dom, 0.0, [&](double x) {
    const double d = evaluate(f1, x, kPoleThreshold) - evaluate(f2, x, kPoleThreshold);
    if (!std::isfinite(d)) return false;
    diffs.push_back(d);
    return true;
  });
  const auto [mn, mx] = std::minmax_element(diffs.begin(), diffs.end());
  double mean = 0.0;
  for (double d : diffs) mean += d;
  mean /= static_cast<double>(diffs.size());
  return {*mx - *mn < kConstantSpread, mean};
}

}  // namespace secant
