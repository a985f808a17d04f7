#ifndef CURVEFORM_CAMPAIGN_HPP
#define CURVEFORM_CAMPAIGN_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "curveform/metrics.hpp"

namespace curveform {

/// Factorial Monte Carlo campaign over control gain and noise-bound levels.
/// Noise levels are multipliers of the cell's gain. Run seeds are assigned
/// deterministically as seed_base + cell_index * replications + rep, so any
/// single run can be re-executed in isolation.
struct CampaignSpec {
  SimConfig base;
  std::vector<double> gain_levels;        // K values
  std::vector<double> noise_multipliers;  // phi = multiplier * K
  int replications = 100;
  std::uint64_t seed_base = 1;
  int jobs = 1;
  int window = 200;

  void validate() const;
  /// Initial-gap rule from the campaign maxima: 4*phi_max + 2*(d + K_max).
  double campaign_min_gap() const;
};

struct RunRow {
  double gain = 0.0;
  double noise_multiplier = 0.0;
  double noise_bound = 0.0;
  int replication = 0;
  std::uint64_t seed = 0;
  RunMetrics metrics;
};

struct CellSummary {
  double gain = 0.0;
  double noise_multiplier = 0.0;
  double noise_bound = 0.0;
  int runs = 0;
  int settled = 0;
  int aborted = 0;
  double mean_eps = 0.0;
  double max_eps = 0.0;
  double mean_k5 = 0.0;  // over settled runs
};

struct CampaignReport {
  std::vector<RunRow> rows;     // ordered by (cell, replication)
  std::vector<CellSummary> cells;
  double target_spacing = 0.0;
  double grand_mean_eps = 0.0;
  double max_eps = 0.0;
  bool any_aborted = false;
};

/// Runs every (gain, noise) cell for `replications` seeds on a worker pool
/// of `jobs` threads. Row order is independent of scheduling.
CampaignReport run_campaign(
    const CurveModel& curve, const CampaignSpec& spec,
    const std::function<void(const RunRow&)>& on_run = {});

}  // namespace curveform

#endif
