#pragma once
#include <array>
#include <iosfwd>
#include <span>

namespace rankeq {

/// Share of total rank held by the poorest k% of vertices, k = 1..100.
/// The origin (0, 0) is implicit.
struct LorenzCurve {
  static constexpr std::size_t kSamples = 100;
  std::array<double, kSamples> samples{};

  /// Value at population fraction k/100 for k in [0, 100].
  double at(std::size_t k) const { return k == 0 ? 0.0 : samples[k - 1]; }
};

/// Sorts the ranks ascending and samples the cumulative-share polyline at each
/// percentile by linear interpolation between the n exact points.
/// Throws std::domain_error on empty input, a negative value or a zero total.
LorenzCurve lorenz_curve(std::span<const double> ranks);

/// 1 - 2B, with B the trapezoidal area under the 101-point curve; clamped to [0, 1].
double gini(const LorenzCurve& curve);

/// Smallest fraction of the population, taken from the richest end, whose
/// combined share reaches `wealth_share`. Interpolates linearly between samples.
double richest_fraction_holding(const LorenzCurve& curve, double wealth_share);

/// Header `percentile,cumulative_share` followed by 100 rows.
void write_lorenz_csv(std::ostream& out, const LorenzCurve& curve);

}  // namespace rankeq
