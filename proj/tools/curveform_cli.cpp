// Command-line front end: single simulations, factorial Monte Carlo
// campaigns, and metric recomputation from persisted trajectory logs.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "curveform/io.hpp"

namespace fs = std::filesystem;
using namespace curveform;

namespace {

std::string default_out_dir() {
  const char* env = std::getenv("CURVEFORM_OUT_DIR");
  return env != nullptr && *env != '\0' ? std::string(env) : std::string(".");
}

CurveModel load_curve_or_die(const std::string& cli_curve,
                             const std::string& config_curve) {
  const std::string path = !cli_curve.empty() ? cli_curve : config_curve;
  if (path.empty())
    throw std::runtime_error(
        "no curve given: set 'curve = <file>' in the config or pass --curve");
  return CurveModel::load(path);
}

void print_metrics(const RunMetrics& m, double b) {
  std::cout << "eps_hat " << format_double(m.formation_error) << "\n";
  std::cout << "eps_hat_over_b " << format_double(m.formation_error / b)
            << "\n";
  if (m.settled)
    std::cout << "k5 " << m.settling_time << "\n";
  else
    std::cout << "k5 NOT_SETTLED\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curveform: balanced-formation simulation on closed curves"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run one seeded simulation");
  std::string sim_config_path, sim_curve, sim_out = default_out_dir();
  std::uint64_t sim_seed = 0;
  bool sim_seed_set = false, sim_no_trajectory = false;
  int sim_window = 200;
  simulate->add_option("--config", sim_config_path, "run configuration file")
      ->required();
  simulate->add_option("--curve", sim_curve, "curve vertex file (overrides config)");
  simulate->add_option("--seed", sim_seed, "seed (overrides config)")
      ->each([&](const std::string&) { sim_seed_set = true; });
  simulate->add_option("--out", sim_out, "output directory");
  simulate->add_flag("--no-trajectory", sim_no_trajectory,
                     "skip writing trajectory_<seed>.csv");
  simulate->add_option("--window", sim_window, "formation-error window");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "run a Monte Carlo campaign");
  std::string camp_spec_path, camp_curve, camp_out = default_out_dir();
  int camp_jobs = 0;
  bool camp_progress = false;
  campaign->add_option("--spec", camp_spec_path, "campaign spec file")
      ->required();
  campaign->add_option("--curve", camp_curve, "curve vertex file (overrides spec)");
  campaign->add_option("--out", camp_out, "output directory");
  campaign->add_option("--jobs", camp_jobs, "worker threads (0 = hardware)");
  campaign->add_flag("--progress", camp_progress, "print one line per run");

  // metrics
  auto* metrics = app.add_subcommand("metrics",
                                     "recompute metrics from a trajectory log");
  std::string met_log;
  int met_window = 200;
  metrics->add_option("--log", met_log, "trajectory CSV")->required();
  metrics->add_option("--window", met_window, "formation-error window");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      SimConfig config = load_sim_config(sim_config_path);
      if (sim_seed_set) config.seed = sim_seed;
      const CurveModel curve = load_curve_or_die(sim_curve, config.curve_file);
      const SimResult result = run_simulation(curve, config);
      fs::create_directories(sim_out);
      if (!sim_no_trajectory) {
        const fs::path path =
            fs::path(sim_out) /
            ("trajectory_" + std::to_string(config.seed) + ".csv");
        write_trajectory_csv(result.log, path.string());
        std::cout << "trajectory " << path.string() << "\n";
      }
      if (result.aborted) {
        std::cerr << "aborted at step " << result.abort_step << ": "
                  << result.abort_reason << "\n";
        return 2;
      }
      if (result.soundness_violations != 0) {
        std::cerr << "soundness violations: " << result.soundness_violations
                  << "\n";
      }
      print_metrics(compute_metrics(result, sim_window),
                    result.log.target_spacing);
      return result.soundness_violations == 0 ? 0 : 3;
    }
    if (*campaign) {
      CampaignSpec spec = load_campaign_spec(camp_spec_path);
      if (camp_jobs > 0)
        spec.jobs = camp_jobs;
      else if (camp_jobs == 0)
        spec.jobs = std::max(1u, std::thread::hardware_concurrency());
      const CurveModel curve =
          load_curve_or_die(camp_curve, spec.base.curve_file);
      const auto progress = [&](const RunRow& row) {
        if (!camp_progress) return;
        std::cout << "run gain=" << format_double(row.gain)
                  << " phi=" << format_double(row.noise_bound)
                  << " rep=" << row.replication << " seed=" << row.seed
                  << (row.metrics.aborted ? " ABORTED" : "") << "\n";
      };
      const CampaignReport report = run_campaign(curve, spec, progress);
      fs::create_directories(camp_out);
      write_runs_csv(report, (fs::path(camp_out) / "runs.csv").string());
      write_summary_csv(report, (fs::path(camp_out) / "summary.csv").string());
      std::cout << "runs " << report.rows.size() << "\n";
      std::cout << "grand_mean_eps_over_b "
                << format_double(report.grand_mean_eps / report.target_spacing)
                << "\n";
      std::cout << "max_eps_over_b "
                << format_double(report.max_eps / report.target_spacing)
                << "\n";
      if (report.any_aborted) {
        std::cerr << "campaign contained aborted runs\n";
        return 2;
      }
      return 0;
    }
    if (*metrics) {
      const TrajectoryLog log = read_trajectory_csv(met_log);
      RunMetrics m;
      m.formation_error = formation_error(log, met_window);
      m.settling_time = settling_time(log);
      m.settled = m.settling_time != kNotSettled;
      print_metrics(m, log.target_spacing);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
