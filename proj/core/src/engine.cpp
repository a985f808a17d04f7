#include "curveform/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curveform {

void SimConfig::validate() const {
  if (n_agents < 2) throw std::invalid_argument("SimConfig: n_agents < 2");
  if (horizon < 0) throw std::invalid_argument("SimConfig: horizon < 0");
  if (!(reference_speed > 0.0))
    throw std::invalid_argument("SimConfig: reference_speed <= 0");
  if (!(gain > 0.0)) throw std::invalid_argument("SimConfig: gain <= 0");
  if (pacemaker < 0 || pacemaker >= n_agents)
    throw std::invalid_argument("SimConfig: pacemaker out of range");
  sensor.validate();
  if (!initial_positions.empty() &&
      initial_positions.size() != static_cast<std::size_t>(n_agents))
    throw std::invalid_argument("SimConfig: wrong initial_positions size");
}

std::vector<double> generate_initial_positions(int n, double circumference,
                                               double min_gap,
                                               RandomStream& rng) {
  if (min_gap * n > circumference)
    throw std::invalid_argument(
        "generate_initial_positions: min_gap infeasible for n agents");
  std::vector<double> p(n);
  for (long attempt = 0; attempt < 10'000'000; ++attempt) {
    for (auto& v : p) v = rng.next_unit() * circumference;
    std::sort(p.begin(), p.end());
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i + 1] - p[i] < min_gap) {
        ok = false;
        break;
      }
    }
    if (ok && circumference - (p.back() - p.front()) < min_gap) ok = false;
    if (ok) return p;
  }
  throw std::runtime_error("generate_initial_positions: rejection overflow");
}

namespace {

struct PairEvent {
  bool present = false;
  double value = 0.0;
};

int pair_index(int i, int j, int n) {
  // Index of unordered pair (i<j) in the row-major upper triangle.
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

SimResult run_simulation(const CurveModel& curve, const SimConfig& config) {
  config.validate();
  const int n = config.n_agents;
  const double l = curve.length();
  const double b = l / n;
  const ControlParams params{config.reference_speed, config.gain, b};
  const double min_gap = config.min_initial_gap >= 0.0
                             ? config.min_initial_gap
                             : config.default_min_gap();

  std::vector<double> positions = config.initial_positions;
  if (positions.empty()) {
    RandomStream init_rng(config.seed, RngDomain::kInitialPositions);
    positions = generate_initial_positions(n, l, min_gap, init_rng);
  } else {
    for (auto& p : positions) p = mod_scalar(p, l);
    std::sort(positions.begin(), positions.end());  // relabel ascending
  }

  std::vector<AgentState> agents(n);
  for (int i = 0; i < n; ++i) {
    agents[i].id = i;
    agents[i].is_pacemaker = (i == config.pacemaker);
  }

  const MultiInterval absent_set = curve.invert_absent(config.sensor.r_sure);

  SimResult result;
  result.log.n_agents = n;
  result.log.curve_length = l;
  result.log.target_spacing = b;
  result.log.horizon = config.horizon;
  result.log.seed = config.seed;
  result.log.steps.reserve(config.horizon + 1);

  const int n_pairs = n * (n - 1) / 2;
  std::vector<double> distances(n_pairs);
  std::vector<PairEvent> events(n_pairs);
  std::vector<MultiInterval> compat(n_pairs, MultiInterval::empty(l));
  std::vector<char> compat_ready(n_pairs);

  for (int k = 0; k <= config.horizon; ++k) {
    // (1) true pairwise distances
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        distances[pair_index(i, j, n)] =
            curve.euclidean_distance(positions[i], positions[j]);
      }
    }
    // (2) measurement events
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int pi = pair_index(i, j, n);
        RandomStream rng(config.seed, RngDomain::kMeasurement,
                         static_cast<std::uint64_t>(k),
                         static_cast<std::uint64_t>(i),
                         static_cast<std::uint64_t>(j));
        const auto y = sample_measurement(config.sensor, distances[pi], rng);
        events[pi] = {y.has_value(), y.value_or(0.0)};
      }
    }
    std::fill(compat_ready.begin(), compat_ready.end(), 0);
    // Shared-realization default: one event per unordered pair, its
    // compatibility set computed lazily and reused by both endpoints. The
    // independent mode draws a fresh ordered-stream event per direction.
    const auto directed_set = [&](int i, int j) -> const MultiInterval& {
      const int pi = pair_index(i, j, n);
      if (config.symmetric_measurements) {
        if (!compat_ready[pi]) {
          compat[pi] = events[pi].present
                           ? curve.invert_measured(
                                 measurement_to_distance_interval(
                                     config.sensor, events[pi].value))
                           : absent_set;
          compat_ready[pi] = 1;
        }
        return compat[pi];
      }
      RandomStream rng(config.seed, RngDomain::kMeasurement,
                       static_cast<std::uint64_t>(k),
                       static_cast<std::uint64_t>(i),
                       static_cast<std::uint64_t>(j));
      const auto y = sample_measurement(config.sensor, distances[pi], rng);
      compat[pi] = y ? curve.invert_measured(
                           measurement_to_distance_interval(config.sensor, *y))
                     : absent_set;
      return compat[pi];
    };

    // (3) estimation: initialize at k = 0, otherwise predict and correct;
    // then follower identification and input pinning.
    try {
      for (int i = 0; i < n; ++i) {
        AgentState& agent = agents[i];
        if (k == 0) {
          std::map<int, MultiInterval> initial_sets;
          if (!agent.is_pacemaker) {
            for (int j = 0; j < n; ++j) {
              if (j != i) initial_sets.emplace(j, directed_set(i, j));
            }
          }
          init_estimates(agent, initial_sets);
        } else {
          std::vector<int> peers;
          peers.reserve(agent.estimates.size());
          for (const auto& [j, _] : agent.estimates) peers.push_back(j);
          for (const int j : peers) {
            MultiInterval predicted = predict(agent, j, params, k - 1);
            agent.estimates.at(j) =
                correct(predicted, directed_set(i, j), i, j, k);
          }
        }
        if (agent.is_pacemaker) continue;
        if (agent.follower == kNoPeer) {
          try_identify_follower(agent, k, config.fuse_nonfollower);
        } else {
          update_input_pin(agent, k);
        }
      }
    } catch (const EstimatorContradiction& e) {
      result.aborted = true;
      result.abort_step = k;
      result.abort_reason = e.what();
      return result;
    }
    // (audit) ground truth must stay inside every tracked estimate
    for (int i = 0; i < n; ++i) {
      for (const auto& [j, estimate] : agents[i].estimates) {
        const double truth = rem_scalar(positions[i] - positions[j], l);
        if (!estimate.contains(truth)) ++result.soundness_violations;
      }
    }
    // (4) control
    for (int i = 0; i < n; ++i) {
      agents[i].last_input = control_input(agents[i], params);
    }
    // (5) log
    StepRecord rec;
    rec.agents.resize(n);
    for (int i = 0; i < n; ++i) {
      AgentRecord& a = rec.agents[i];
      a.position = positions[i];
      a.input = agents[i].last_input;
      a.follower = agents[i].follower;
      a.identified_at = agents[i].identified_at;
      a.input_pinned_at = agents[i].input_pinned_at;
      if (agents[i].follower != kNoPeer) {
        const Hull h = agents[i].estimates.at(agents[i].follower).hull();
        a.hull_lo = h.lo;
        a.hull_hi = h.hi;
      } else {
        a.hull_lo = std::numeric_limits<double>::quiet_NaN();
        a.hull_hi = std::numeric_limits<double>::quiet_NaN();
      }
    }
    rec.cyclic_x.resize(n);
    for (int a = 0; a < n; ++a) {
      const int i = (a + 1) % n;
      rec.cyclic_x[a] = rem_scalar(positions[i] - positions[a], l);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int pi = pair_index(i, j, n);
        rec.measurements.push_back({i, j, events[pi].present, events[pi].value});
      }
    }
    result.log.steps.push_back(std::move(rec));
    // (6) move
    if (k < config.horizon) {
      for (int i = 0; i < n; ++i) {
        positions[i] += config.intrinsic_speed + agents[i].last_input;
      }
    }
  }
  return result;
}

}  // namespace curveform
