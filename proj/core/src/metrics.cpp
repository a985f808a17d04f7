#include "curveform/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace curveform {

double formation_error(const TrajectoryLog& log, int window) {
  if (log.steps.empty()) return 0.0;
  const int total = static_cast<int>(log.steps.size());
  const int w = std::min(window, total);
  double worst = 0.0;
  for (int k = total - w; k < total; ++k) {
    for (const double x : log.steps[k].cyclic_x) {
      worst = std::max(worst, std::abs(x - log.target_spacing));
    }
  }
  return worst;
}

std::vector<int> per_pair_settling(const TrajectoryLog& log) {
  const int n = log.n_agents;
  const int total = static_cast<int>(log.steps.size());
  std::vector<int> out(n, kNotSettled);
  if (total == 0) return out;
  for (int pair = 0; pair < n; ++pair) {
    const double terminal = log.steps.back().cyclic_x[pair];
    if (!(terminal > 0.0)) continue;  // band undefined, report NOT_SETTLED
    const double band = 0.05 * terminal;
    int first = 0;
    for (int k = total - 1; k >= 0; --k) {
      if (std::abs(log.steps[k].cyclic_x[pair] - terminal) > band) {
        first = k + 1;
        break;
      }
    }
    out[pair] = first;
  }
  return out;
}

int settling_time(const TrajectoryLog& log) {
  int worst = 0;
  for (const int k5 : per_pair_settling(log)) {
    if (k5 == kNotSettled) return kNotSettled;
    worst = std::max(worst, k5);
  }
  return worst;
}

RunMetrics compute_metrics(const SimResult& result, int window) {
  RunMetrics m;
  m.aborted = result.aborted;
  if (result.aborted) return m;
  m.formation_error = formation_error(result.log, window);
  m.settling_time = settling_time(result.log);
  m.settled = m.settling_time != kNotSettled;
  return m;
}

}  // namespace curveform
