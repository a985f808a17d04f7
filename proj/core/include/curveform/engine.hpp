#ifndef CURVEFORM_ENGINE_HPP
#define CURVEFORM_ENGINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "curveform/agent.hpp"
#include "curveform/curve.hpp"
#include "curveform/rng.hpp"
#include "curveform/sensing.hpp"

namespace curveform {

struct SimConfig {
  int n_agents = 6;
  double intrinsic_speed = 0.0;    // s; relative dynamics do not depend on it
  double reference_speed = 0.003;  // d
  double gain = 0.003;             // K
  SensorSpec sensor{0.32, 0.35, 0.5, 0.006};
  int horizon = 5000;  // T
  std::uint64_t seed = 1;
  int pacemaker = 0;  // agent index after relabeling by initial position
  std::vector<double> initial_positions;  // empty -> rejection-sampled
  double min_initial_gap = -1.0;  // < 0 -> 4*phi + 2*(d + K)
  bool symmetric_measurements = true;   // one shared realization per pair
  bool fuse_nonfollower = false;  // keep fusing non-follower measurements
  std::string curve_file;         // CLI only; the engine takes a CurveModel

  void validate() const;
  double default_min_gap() const {
    return 4.0 * sensor.phi + 2.0 * (reference_speed + gain);
  }
};

struct MeasurementRecord {
  int i = 0;
  int j = 0;
  bool present = false;
  double value = 0.0;
};

struct AgentRecord {
  double position = 0.0;
  double input = 0.0;
  int follower = kNoPeer;
  int identified_at = kNever;
  int input_pinned_at = kNever;
  double hull_lo = 0.0;  // hull of the follower estimate; NaN while unknown
  double hull_hi = 0.0;
};

struct StepRecord {
  std::vector<AgentRecord> agents;
  std::vector<double> cyclic_x;  // index a holds x for pair ((a+1)%N, a)
  std::vector<MeasurementRecord> measurements;
};

struct TrajectoryLog {
  int n_agents = 0;
  double curve_length = 0.0;
  double target_spacing = 0.0;
  int horizon = 0;
  std::uint64_t seed = 0;
  std::vector<StepRecord> steps;
};

struct SimResult {
  TrajectoryLog log;
  bool aborted = false;
  int abort_step = -1;
  std::string abort_reason;
  long soundness_violations = 0;  // ground truth outside an estimate set
};

/// Rejection-samples n sorted positions in [0, l) whose cyclic gaps all meet
/// min_gap, uniformly among admissible configurations.
std::vector<double> generate_initial_positions(int n, double circumference,
                                               double min_gap,
                                               RandomStream& rng);

/// Runs the synchronous measure -> estimate -> control -> move loop for
/// config.horizon steps. Deterministic given (config, seed). An estimator
/// contradiction aborts the run with the partial log attached.
SimResult run_simulation(const CurveModel& curve, const SimConfig& config);

}  // namespace curveform

#endif
