#ifndef CURVEFORM_IO_HPP
#define CURVEFORM_IO_HPP

#include <map>
#include <ostream>
#include <string>

#include "curveform/campaign.hpp"

namespace curveform {

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

/// Key-value configuration text: one `key = value` per line, `#` comments.
std::map<std::string, std::string> read_key_values(const std::string& path);

/// Builds a SimConfig from key-value text. Unknown keys are an error.
SimConfig sim_config_from_kv(const std::map<std::string, std::string>& kv);
SimConfig load_sim_config(const std::string& path);

/// Builds a CampaignSpec (base run keys plus campaign keys) from one file.
CampaignSpec campaign_spec_from_kv(
    const std::map<std::string, std::string>& kv);
CampaignSpec load_campaign_spec(const std::string& path);

/// Trajectory CSV: `#key value` header lines (n, l, b, T, seed) followed by
/// one row per (step, record-type); record types agent, pair, meas.
void write_trajectory_csv(const TrajectoryLog& log, std::ostream& out);
void write_trajectory_csv(const TrajectoryLog& log, const std::string& path);
TrajectoryLog read_trajectory_csv(const std::string& path);

/// Per-run and per-cell campaign reports.
void write_runs_csv(const CampaignReport& report, std::ostream& out);
void write_summary_csv(const CampaignReport& report, std::ostream& out);
void write_runs_csv(const CampaignReport& report, const std::string& path);
void write_summary_csv(const CampaignReport& report, const std::string& path);

}  // namespace curveform

#endif
