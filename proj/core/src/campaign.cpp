#include "curveform/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace curveform {

void CampaignSpec::validate() const {
  if (gain_levels.empty() || noise_multipliers.empty())
    throw std::invalid_argument("CampaignSpec: empty factor levels");
  if (replications < 1)
    throw std::invalid_argument("CampaignSpec: replications < 1");
  if (jobs < 1) throw std::invalid_argument("CampaignSpec: jobs < 1");
}

double CampaignSpec::campaign_min_gap() const {
  const double k_max = *std::max_element(gain_levels.begin(), gain_levels.end());
  double phi_max = 0.0;
  for (const double k : gain_levels) {
    for (const double m : noise_multipliers) phi_max = std::max(phi_max, m * k);
  }
  return 4.0 * phi_max + 2.0 * (base.reference_speed + k_max);
}

CampaignReport run_campaign(const CurveModel& curve, const CampaignSpec& spec,
                            const std::function<void(const RunRow&)>& on_run) {
  spec.validate();
  const double min_gap = spec.base.min_initial_gap >= 0.0
                             ? spec.base.min_initial_gap
                             : spec.campaign_min_gap();

  struct Cell {
    double gain, mult;
  };
  std::vector<Cell> cells;
  for (const double k : spec.gain_levels) {
    for (const double m : spec.noise_multipliers) cells.push_back({k, m});
  }
  const std::size_t total = cells.size() * spec.replications;

  CampaignReport report;
  report.target_spacing = curve.length() / spec.base.n_agents;
  report.rows.resize(total);

  std::atomic<std::size_t> next{0};
  std::mutex callback_mutex;
  const auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      const std::size_t cell_idx = idx / spec.replications;
      const int rep = static_cast<int>(idx % spec.replications);
      const Cell& cell = cells[cell_idx];

      SimConfig config = spec.base;
      config.gain = cell.gain;
      config.sensor.phi = cell.mult * cell.gain;
      config.min_initial_gap = min_gap;
      config.seed = spec.seed_base + static_cast<std::uint64_t>(idx);

      const SimResult result = run_simulation(curve, config);
      RunRow& row = report.rows[idx];
      row.gain = cell.gain;
      row.noise_multiplier = cell.mult;
      row.noise_bound = config.sensor.phi;
      row.replication = rep;
      row.seed = config.seed;
      row.metrics = compute_metrics(result, spec.window);
      if (on_run) {
        std::lock_guard<std::mutex> lock(callback_mutex);
        on_run(row);
      }
    }
  };

  if (spec.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(spec.jobs);
    for (int t = 0; t < spec.jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  report.cells.reserve(cells.size());
  double eps_sum = 0.0;
  std::size_t eps_count = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellSummary s;
    s.gain = cells[c].gain;
    s.noise_multiplier = cells[c].mult;
    s.noise_bound = cells[c].mult * cells[c].gain;
    double k5_sum = 0.0;
    for (int rep = 0; rep < spec.replications; ++rep) {
      const RunRow& row = report.rows[c * spec.replications + rep];
      ++s.runs;
      if (row.metrics.aborted) {
        ++s.aborted;
        report.any_aborted = true;
        continue;
      }
      s.mean_eps += row.metrics.formation_error;
      s.max_eps = std::max(s.max_eps, row.metrics.formation_error);
      eps_sum += row.metrics.formation_error;
      ++eps_count;
      report.max_eps = std::max(report.max_eps, row.metrics.formation_error);
      if (row.metrics.settled) {
        ++s.settled;
        k5_sum += row.metrics.settling_time;
      }
    }
    const int counted = s.runs - s.aborted;
    if (counted > 0) s.mean_eps /= counted;
    if (s.settled > 0) s.mean_k5 = k5_sum / s.settled;
    report.cells.push_back(s);
  }
  if (eps_count > 0) report.grand_mean_eps = eps_sum / eps_count;
  return report;
}

}  // namespace curveform
