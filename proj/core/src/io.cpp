#include "curveform/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace curveform {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad number for '" + key + "': " + s);
  }
}

long parse_long(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer for '" + key + "': " + s);
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer for '" + key + "': " + s);
  }
}

bool parse_bool(const std::string& s, const std::string& key) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::runtime_error("config: bad boolean for '" + key + "': " + s);
}

std::vector<double> parse_double_list(const std::string& s,
                                      const std::string& key) {
  std::vector<double> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(item, key));
  }
  return out;
}

/// Applies base-run keys; returns false for keys it does not own.
bool apply_sim_key(SimConfig& c, const std::string& key,
                   const std::string& value) {
  if (key == "agents" || key == "n_agents")
    c.n_agents = static_cast<int>(parse_long(value, key));
  else if (key == "intrinsic_speed" || key == "s")
    c.intrinsic_speed = parse_double(value, key);
  else if (key == "reference_speed" || key == "d")
    c.reference_speed = parse_double(value, key);
  else if (key == "gain" || key == "K")
    c.gain = parse_double(value, key);
  else if (key == "noise_bound" || key == "phi")
    c.sensor.phi = parse_double(value, key);
  else if (key == "r_sure")
    c.sensor.r_sure = parse_double(value, key);
  else if (key == "r_max")
    c.sensor.r_max = parse_double(value, key);
  else if (key == "q_bar")
    c.sensor.q_bar = parse_double(value, key);
  else if (key == "horizon" || key == "T")
    c.horizon = static_cast<int>(parse_long(value, key));
  else if (key == "seed")
    c.seed = parse_u64(value, key);
  else if (key == "pacemaker")
    c.pacemaker = static_cast<int>(parse_long(value, key));
  else if (key == "min_initial_gap")
    c.min_initial_gap = parse_double(value, key);
  else if (key == "initial_positions")
    c.initial_positions = parse_double_list(value, key);
  else if (key == "symmetric_measurements")
    c.symmetric_measurements = parse_bool(value, key);
  else if (key == "fuse_nonfollower")
    c.fuse_nonfollower = parse_bool(value, key);
  else if (key == "curve")
    c.curve_file = value;
  else
    return false;
  return true;
}

}  // namespace

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: expected 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::runtime_error("config: empty key: " + line);
    kv[key] = value;
  }
  return kv;
}

SimConfig sim_config_from_kv(const std::map<std::string, std::string>& kv) {
  SimConfig c;
  for (const auto& [key, value] : kv) {
    if (!apply_sim_key(c, key, value))
      throw std::runtime_error("config: unknown key '" + key + "'");
  }
  return c;
}

SimConfig load_sim_config(const std::string& path) {
  return sim_config_from_kv(read_key_values(path));
}

CampaignSpec campaign_spec_from_kv(
    const std::map<std::string, std::string>& kv) {
  CampaignSpec spec;
  for (const auto& [key, value] : kv) {
    if (apply_sim_key(spec.base, key, value)) continue;
    if (key == "gain_levels" || key == "K_levels")
      spec.gain_levels = parse_double_list(value, key);
    else if (key == "noise_multipliers" || key == "phi_multipliers")
      spec.noise_multipliers = parse_double_list(value, key);
    else if (key == "replications")
      spec.replications = static_cast<int>(parse_long(value, key));
    else if (key == "seed_base")
      spec.seed_base = parse_u64(value, key);
    else if (key == "jobs")
      spec.jobs = static_cast<int>(parse_long(value, key));
    else if (key == "window")
      spec.window = static_cast<int>(parse_long(value, key));
    else
      throw std::runtime_error("config: unknown key '" + key + "'");
  }
  return spec;
}

CampaignSpec load_campaign_spec(const std::string& path) {
  return campaign_spec_from_kv(read_key_values(path));
}

void write_trajectory_csv(const TrajectoryLog& log, std::ostream& out) {
  out << "#n " << log.n_agents << "\n";
  out << "#l " << format_double(log.curve_length) << "\n";
  out << "#b " << format_double(log.target_spacing) << "\n";
  out << "#T " << log.horizon << "\n";
  out << "#seed " << log.seed << "\n";
  out << "record,step,i,j,p,u,follower,k_identify,k_pin,hull_lo,hull_hi,x,y,"
         "present\n";
  for (std::size_t k = 0; k < log.steps.size(); ++k) {
    const StepRecord& rec = log.steps[k];
    for (std::size_t i = 0; i < rec.agents.size(); ++i) {
      const AgentRecord& a = rec.agents[i];
      out << "agent," << k << ',' << i << ",," << format_double(a.position)
          << ',' << format_double(a.input) << ',' << a.follower << ','
          << a.identified_at << ',' << a.input_pinned_at << ',';
      if (a.follower != kNoPeer) {
        out << format_double(a.hull_lo) << ',' << format_double(a.hull_hi);
      } else {
        out << ',';
      }
      out << ",,,\n";
    }
    const int n = log.n_agents;
    for (int a = 0; a < n; ++a) {
      out << "pair," << k << ',' << (a + 1) % n << ',' << a << ",,,,,,,,"
          << format_double(rec.cyclic_x[a]) << ",,\n";
    }
    for (const MeasurementRecord& m : rec.measurements) {
      out << "meas," << k << ',' << m.i << ',' << m.j << ",,,,,,,,,";
      if (m.present) out << format_double(m.value);
      out << ',' << (m.present ? 1 : 0) << "\n";
    }
  }
}

void write_trajectory_csv(const TrajectoryLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  write_trajectory_csv(log, out);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  // trailing empty field when the line ends with ','
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

TrajectoryLog read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  TrajectoryLog log;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "n")
        ss >> log.n_agents;
      else if (key == "l")
        ss >> log.curve_length;
      else if (key == "b")
        ss >> log.target_spacing;
      else if (key == "T")
        ss >> log.horizon;
      else if (key == "seed")
        ss >> log.seed;
      continue;
    }
    if (!header_seen) {  // column header row
      header_seen = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() < 2) continue;
    const std::size_t step = std::stoul(f[1]);
    while (log.steps.size() <= step) {
      StepRecord rec;
      rec.agents.resize(log.n_agents);
      rec.cyclic_x.resize(log.n_agents, 0.0);
      log.steps.push_back(std::move(rec));
    }
    StepRecord& rec = log.steps[step];
    if (f[0] == "agent") {
      AgentRecord& a = rec.agents.at(std::stoul(f[2]));
      a.position = std::stod(f[4]);
      a.input = std::stod(f[5]);
      a.follower = std::stoi(f[6]);
      a.identified_at = std::stoi(f[7]);
      a.input_pinned_at = std::stoi(f[8]);
      if (!f[9].empty()) {
        a.hull_lo = std::stod(f[9]);
        a.hull_hi = std::stod(f[10]);
      } else {
        a.hull_lo = std::numeric_limits<double>::quiet_NaN();
        a.hull_hi = std::numeric_limits<double>::quiet_NaN();
      }
    } else if (f[0] == "pair") {
      const int j = std::stoi(f[3]);
      rec.cyclic_x.at(j) = std::stod(f[11]);
    } else if (f[0] == "meas") {
      MeasurementRecord m;
      m.i = std::stoi(f[2]);
      m.j = std::stoi(f[3]);
      m.present = f.size() > 13 && f[13] == "1";
      m.value = m.present ? std::stod(f[12]) : 0.0;
      rec.measurements.push_back(m);
    }
  }
  return log;
}

void write_runs_csv(const CampaignReport& report, std::ostream& out) {
  out << "gain,noise_multiplier,noise_bound,replication,seed,eps_hat,k5,"
         "settled,aborted\n";
  for (const RunRow& r : report.rows) {
    out << format_double(r.gain) << ',' << format_double(r.noise_multiplier)
        << ',' << format_double(r.noise_bound) << ',' << r.replication << ','
        << r.seed << ',' << format_double(r.metrics.formation_error) << ','
        << r.metrics.settling_time << ',' << (r.metrics.settled ? 1 : 0) << ','
        << (r.metrics.aborted ? 1 : 0) << "\n";
  }
}

void write_summary_csv(const CampaignReport& report, std::ostream& out) {
  out << "gain,noise_multiplier,noise_bound,runs,settled,aborted,mean_eps,"
         "max_eps,mean_eps_over_b,max_eps_over_b,mean_k5\n";
  const double b = report.target_spacing;
  for (const CellSummary& c : report.cells) {
    out << format_double(c.gain) << ',' << format_double(c.noise_multiplier)
        << ',' << format_double(c.noise_bound) << ',' << c.runs << ','
        << c.settled << ',' << c.aborted << ',' << format_double(c.mean_eps)
        << ',' << format_double(c.max_eps) << ','
        << format_double(c.mean_eps / b) << ',' << format_double(c.max_eps / b)
        << ',' << format_double(c.mean_k5) << "\n";
  }
}

void write_runs_csv(const CampaignReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  write_runs_csv(report, out);
}

void write_summary_csv(const CampaignReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  write_summary_csv(report, out);
}

}  // namespace curveform
