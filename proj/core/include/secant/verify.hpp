#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "secant/antiderivative.hpp"
#include "secant/trig_rational.hpp"

namespace secant {

/// Sampling window for the numeric oracles. The grid is fixed: sample i sits
/// at lo + (i + 1/2) (hi - lo) / samples. A sample whose stencil comes within
/// kPoleThreshold of a pole is moved by a deterministic offset; more than
/// kMaxRejections moves in total make the domain unusable.
struct VerificationDomain {
  double lo = -std::numbers::pi / 2 + 0.1;
  double hi = std::numbers::pi / 2 - 0.1;
  std::size_t samples = 25;
  double step = 1e-5;
};

inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr double kPoleThreshold = 1e-6;
inline constexpr int kMaxRejections = 100;
inline constexpr double kConstantSpread = 1e-8;

/// Max over samples of |F'(x) - R(x)| / max(1, |R(x)|), with F' from the
/// fourth-order central difference of width `dom.step`.
/// Throws Errc::InvalidArgument for a malformed domain, Errc::DomainUnusable
/// when too many samples hit poles.
double diff_check(const TrigAntiderivative& f, const TrigRational& r, const VerificationDomain& dom = {});

struct ConstantDifference {
  bool is_constant;
  double constant;  // mean of F1 - F2 over the samples
};

/// Whether F1 - F2 is constant on the domain (spread below kConstantSpread).
ConstantDifference constant_difference_check(const TrigAntiderivative& f1, const TrigAntiderivative& f2,
                                             const VerificationDomain& dom = {});

/// The sample positions actually used for `accept`, after pole avoidance.
/// `accept` returns false or throws Errc::SingularPoint to reject a point.
std::vector<double> sample_grid(const VerificationDomain& dom, double margin,
                                const std::function<bool(double)>& accept);

}  // namespace secant
