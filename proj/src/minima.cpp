#include "xychain/minima.hpp"

#include <algorithm>
#include <cmath>

namespace xychain {

std::vector<Minimum> detect_minima(std::span<const SeriesPoint> series,
                                   double prominence_threshold) {
  if (series.size() < 3) throw ArgumentError("detect_minima: need at least 3 points");
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (!(series[i].h > series[i - 1].h)) {
      throw ArgumentError("detect_minima: series must be strictly increasing in h");
    }
  }

  std::vector<Minimum> out;
  const std::size_t n = series.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double v = series[i].value;
    if (!(v < series[i - 1].value && v < series[i + 1].value)) continue;

    double left_peak = v;
    for (std::size_t j = i; j-- > 0;) {
      if (series[j].value < v) break;
      left_peak = std::max(left_peak, series[j].value);
    }
    double right_peak = v;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (series[j].value < v) break;
      right_peak = std::max(right_peak, series[j].value);
    }
    const double prominence = std::min(left_peak - v, right_peak - v);
    if (prominence >= prominence_threshold) out.push_back({series[i].h, v, prominence});
  }
  return out;
}

std::vector<Minimum> detect_minima_even(std::span<const SeriesPoint> series,
                                        double prominence_threshold) {
  if (series.empty() || series.front().h != 0.0) {
    return detect_minima(series, prominence_threshold);
  }
  std::vector<SeriesPoint> mirrored;
  mirrored.reserve(2 * series.size() - 1);
  for (std::size_t i = series.size(); i-- > 1;) {
    mirrored.push_back({-series[i].h, series[i].value});
  }
  mirrored.insert(mirrored.end(), series.begin(), series.end());

  std::vector<Minimum> out;
  for (const auto& m : detect_minima(mirrored, prominence_threshold)) {
    if (m.h >= 0.0) out.push_back(m);
  }
  return out;
}

}  // namespace xychain
