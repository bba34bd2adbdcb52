#pragma once

#include <span>
#include <vector>

#include "xychain/spectral.hpp"

namespace xychain {

struct SeriesPoint {
  double h = 0.0;
  double value = 0.0;
};

struct Minimum {
  double h = 0.0;
  double value = 0.0;
  double prominence = 0.0;
};

/// Interior points strictly below both neighbours whose prominence is at least
/// `prominence_threshold`. On each side the rise is the highest value reached
/// before the series drops below the minimum (or ends); prominence is the
/// smaller of the two rises. Endpoints are never minima. `series` must be
/// sorted by h and hold at least 3 points.
std::vector<Minimum> detect_minima(std::span<const SeriesPoint> series,
                                   double prominence_threshold);

/// detect_minima for a curve that is even in h. When the series starts at
/// h = 0 it is mirrored onto negative fields first, so a dip at the origin is
/// reported like any other interior minimum. Only minima with h >= 0 are returned.
std::vector<Minimum> detect_minima_even(std::span<const SeriesPoint> series,
                                        double prominence_threshold);

struct MinimaReport {
  double temperature = 0.0;
  std::vector<Minimum> minima;  // sorted by h
  CrossingSet crossings;
  double factorizing_field = 0.0;
  double critical_field = kCriticalField;
};

}  // namespace xychain
