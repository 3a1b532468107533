#include "rankeq/inequality.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace rankeq {

LorenzCurve lorenz_curve(std::span<const double> ranks) {
  if (ranks.empty()) throw std::domain_error("Lorenz curve of an empty rank vector");
  std::vector<double> sorted(ranks.begin(), ranks.end());
  for (double x : sorted)
    if (!(x >= 0.0)) throw std::domain_error("Lorenz curve of a negative rank");
  std::sort(sorted.begin(), sorted.end());

  const std::size_t n = sorted.size();
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) cumulative[i + 1] = cumulative[i] + sorted[i];
  const double total = cumulative[n];
  if (!(total > 0.0)) throw std::domain_error("Lorenz curve of ranks with zero total");

  LorenzCurve curve;
  for (std::uint64_t k = 1; k <= LorenzCurve::kSamples; ++k) {
    // Population position k*n/100, split exactly into whole and fractional part.
    const std::uint64_t scaled = k * n;
    const std::size_t whole = scaled / LorenzCurve::kSamples;
    const double frac = static_cast<double>(scaled % LorenzCurve::kSamples) / LorenzCurve::kSamples;
    double value = cumulative[whole];
    if (whole < n) value += frac * sorted[whole];
    curve.samples[k - 1] = value / total;
  }
  return curve;
}

double gini(const LorenzCurve& curve) {
  constexpr double width = 1.0 / LorenzCurve::kSamples;
  double area = 0.0;
  for (std::size_t k = 1; k <= LorenzCurve::kSamples; ++k)
    area += 0.5 * width * (curve.at(k - 1) + curve.at(k));
  return std::clamp(1.0 - 2.0 * area, 0.0, 1.0);
}

double richest_fraction_holding(const LorenzCurve& curve, double wealth_share) {
  const double level = 1.0 - std::clamp(wealth_share, 0.0, 1.0);
  for (std::size_t k = 1; k <= LorenzCurve::kSamples; ++k) {
    const double lo = curve.at(k - 1), hi = curve.at(k);
    if (hi < level) continue;
    const double t = hi > lo ? (level - lo) / (hi - lo) : 0.0;
    const double x = (static_cast<double>(k - 1) + std::clamp(t, 0.0, 1.0)) / LorenzCurve::kSamples;
    return 1.0 - x;
  }
  return 0.0;
}

void write_lorenz_csv(std::ostream& out, const LorenzCurve& curve) {
  out << "percentile,cumulative_share\n";
  for (std::size_t k = 1; k <= LorenzCurve::kSamples; ++k)
    fmt::print(out, "{},{}\n", k, curve.at(k));
}

}  // namespace rankeq
