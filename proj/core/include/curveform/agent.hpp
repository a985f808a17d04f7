#ifndef CURVEFORM_AGENT_HPP
#define CURVEFORM_AGENT_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "curveform/circle_math.hpp"

namespace curveform {

inline constexpr int kNoPeer = -1;
inline constexpr int kNever = -1;

/// Raised when a correction empties an estimate. Under the bounded-noise
/// sensor model this signals a violated assumption, not a recoverable state.
struct EstimatorContradiction : std::runtime_error {
  EstimatorContradiction(int agent_, int peer_, int step_)
      : std::runtime_error("estimator contradiction: agent " +
                           std::to_string(agent_) + ", peer " +
                           std::to_string(peer_) + ", step " +
                           std::to_string(step_)),
        agent(agent_),
        peer(peer_),
        step(step_) {}
  int agent;
  int peer;
  int step;
};

struct ControlParams {
  double reference_speed = 0.003;  // d, arclength per step
  double gain = 0.003;             // K
  double target_spacing = 0.0;     // b = l/N
};

/// Per-agent estimator and controller memory. Before the closest follower is
/// identified, `estimates` holds one multi-interval per peer; afterwards only
/// the follower entry remains.
struct AgentState {
  int id = 0;
  bool is_pacemaker = false;
  std::map<int, MultiInterval> estimates;  // peer id -> relative-position set
  int follower = kNoPeer;
  int identified_at = kNever;   // step at which the follower was identified
  int input_pinned_at = kNever; // step after which the follower input is known
  Hull hull_at_identify{0.0, 0.0};
  double last_input = 0.0;      // own input applied at the previous step
};

/// Seeds the estimator with the step-0 measurement-compatibility sets.
/// The pacemaker never estimates and keeps an empty map.
void init_estimates(AgentState& agent,
                    const std::map<int, MultiInterval>& initial_sets);

/// Interval bound on the peer's input at step t, per the input-estimate
/// schedule: [0, d+K] before identification; [d, d+K] for the follower until
/// its input is pinned; [d, d] afterwards.
Interval input_estimate(const AgentState& agent, int peer,
                        const ControlParams& params, int t);

/// Propagates the peer estimate one step through the relative dynamics:
/// the increment of the tracked relative position is own_input - peer_input,
/// so the estimate is shifted by own_input minus the peer-input bound.
MultiInterval predict(const AgentState& agent, int peer,
                      const ControlParams& params, int t);

/// Intersects the prediction with the measurement-compatibility set; throws
/// EstimatorContradiction when the result is empty.
MultiInterval correct(const MultiInterval& predicted,
                      const MultiInterval& compatible, int agent_id, int peer,
                      int step);

/// Applies the follower-identification test: a unique peer whose estimate
/// hull is strictly positive and lies strictly below every positive-infimum
/// part of every other peer's estimate. On success records the step and the
/// hull, and drops all other estimates (unless `keep_others`, the optional
/// fusion mode). Returns true when identification happened at this call.
bool try_identify_follower(AgentState& agent, int step,
                           bool keep_others = false);

/// After identification, pins the follower's input to the reference speed at
/// the first step whose estimate hull is disjoint (strictly, closed-set
/// semantics) from the hull stored at identification.
bool update_input_pin(AgentState& agent, int step);

/// Three-level control: the pacemaker always outputs d; others output 0
/// until identification, then d + K while the spacing estimate is short of
/// the target and d afterwards (ties take the low level).
double control_input(const AgentState& agent, const ControlParams& params);

}  // namespace curveform

#endif
