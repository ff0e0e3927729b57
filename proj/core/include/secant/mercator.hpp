#pragma once

#include <numbers>

namespace secant {

/// Spherical Mercator: x = longitude, y = integral of sec from 0 to the
/// latitude. The Earth radius cancels, so map units are radians.
struct GeoPoint {
  double lon;
  double lat;
};

struct MapPoint {
  double x;
  double y;
};

/// Largest |lat| accepted by the closed form and by the quadrature.
inline constexpr double kClosedFormLatLimit = std::numbers::pi / 2 - 1e-9;
inline constexpr double kNumericLatLimit = std::numbers::pi / 2 - 1e-3;
inline constexpr long kMaxSimpsonPanels = 1'000'000;

/// ln|sec lat + tan lat|. Throws Errc::LatitudeOutOfRange past the guard band.
double mercator_y(double lat);

/// Adaptive Simpson quadrature of sec over [0, lat] to absolute error `tol`.
/// Throws Errc::LatitudeOutOfRange, Errc::InvalidArgument for tol outside
/// [1e-13, 1e-3], Errc::ToleranceNotMet when more than kMaxSimpsonPanels
/// panels would be needed.
double mercator_y_numeric(double lat, double tol);

/// (lon, mercator_y(lat)) times `scale`.
MapPoint project(const GeoPoint& g, double scale = 1.0);

/// Central difference of mercator_y at lat with half-width h, divided by
/// sec lat; 1 for a conformal map. Throws Errc::LatitudeOutOfRange when
/// |lat| + h reaches the quadrature guard band, Errc::InvalidArgument for h
/// outside [1e-8, 1e-2].
double conformality_ratio(double lat, double h = 1e-4);

}  // namespace secant
