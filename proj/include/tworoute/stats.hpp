#ifndef TWOROUTE_STATS_HPP
#define TWOROUTE_STATS_HPP

#include <span>
#include <vector>

namespace tworoute {

/// 100*(found-optimum)/optimum; values within rounding noise of the optimum
/// are clamped to exactly zero.
double gap_percent(double found, double optimum);

/// Linearly interpolated quantile of an unsorted sample, q in [0,1].
double quantile(std::vector<double> sample, double q);

/// Box-and-whisker summary with Tukey whiskers (the most extreme points
/// within 1.5 IQR of the quartiles).
struct BoxStats {
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0, q3 = 0.0;
  double whisker_lo = 0.0, whisker_hi = 0.0;
  int count_optimal = 0;  // entries equal to zero
  int count = 0;
};

BoxStats box_stats(std::span<const double> gaps);

}  // namespace tworoute

#endif
