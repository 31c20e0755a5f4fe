#include "tworoute/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tworoute {

double gap_percent(double found, double optimum) {
  if (!(optimum > 0.0)) throw std::invalid_argument("gap needs a positive optimum");
  if (std::abs(found - optimum) <= 1e-7 * optimum) return 0.0;
  return 100.0 * (found - optimum) / optimum;
}

double quantile(std::vector<double> sample, double q) {
  if (sample.empty()) throw std::invalid_argument("quantile of empty sample");
  std::sort(sample.begin(), sample.end());
  const double pos = q * static_cast<double>(sample.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sample.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sample[lo] * (1.0 - frac) + sample[hi] * frac;
}

BoxStats box_stats(std::span<const double> gaps) {
  BoxStats st;
  st.count = static_cast<int>(gaps.size());
  if (gaps.empty()) return st;
  std::vector<double> v(gaps.begin(), gaps.end());
  st.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  st.median = quantile(v, 0.5);
  st.q1 = quantile(v, 0.25);
  st.q3 = quantile(v, 0.75);
  const double iqr = st.q3 - st.q1;
  const double lo_fence = st.q1 - 1.5 * iqr, hi_fence = st.q3 + 1.5 * iqr;
  st.whisker_lo = st.q3;
  st.whisker_hi = st.q1;
  std::sort(v.begin(), v.end());
  st.whisker_lo = v.front();
  st.whisker_hi = v.back();
  for (double x : v) {
    if (x >= lo_fence) {
      st.whisker_lo = x;
      break;
    }
  }
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it <= hi_fence) {
      st.whisker_hi = *it;
      break;
    }
  }
  for (double x : v) st.count_optimal += (x == 0.0) ? 1 : 0;
  return st;
}

}  // namespace tworoute
