#ifndef CURVEFORM_METRICS_HPP
#define CURVEFORM_METRICS_HPP

#include <vector>

#include "curveform/engine.hpp"

namespace curveform {

inline constexpr int kNotSettled = -1;

struct RunMetrics {
  double formation_error = 0.0;  // eps-hat, arclength units
  int settling_time = kNotSettled;
  bool settled = false;
  bool aborted = false;
};

/// Finite-horizon surrogate of the limsup formation error: max over cyclic
/// pairs and over the trailing `window` steps of |x - b|.
double formation_error(const TrajectoryLog& log, int window = 200);

/// Per cyclic pair, the first step after which the spacing stays within 5%
/// of its terminal value; kNotSettled when the terminal value is <= 0.
std::vector<int> per_pair_settling(const TrajectoryLog& log);

/// Smallest step from which every cyclic pair stays within its 5% band.
int settling_time(const TrajectoryLog& log);

RunMetrics compute_metrics(const SimResult& result, int window = 200);

}  // namespace curveform

#endif
