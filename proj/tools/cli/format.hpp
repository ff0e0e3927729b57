#pragma once

#include <string>

#include "secant/antiderivative.hpp"

namespace secant::cli {

/// Deterministic text such as "1/2*ln|1+sin(x)| - 1/2*ln|1-sin(x)| + C".
/// Terms are joined by " + " / " - ", rational coefficients print as p/q,
/// logs of linear factors as ln|...| and of positive quadratics as ln(...).
std::string format_antiderivative(const Antiderivative& f);
std::string format_antiderivative(const TrigAntiderivative& f);

}  // namespace secant::cli
