#include "curveform/agent.hpp"

namespace curveform {

void init_estimates(AgentState& agent,
                    const std::map<int, MultiInterval>& initial_sets) {
  agent.estimates = agent.is_pacemaker ? std::map<int, MultiInterval>{}
                                       : initial_sets;
  agent.follower = kNoPeer;
  agent.identified_at = kNever;
  agent.input_pinned_at = kNever;
  agent.last_input = 0.0;
}

Interval input_estimate(const AgentState& agent, int peer,
                        const ControlParams& params, int t) {
  const double d = params.reference_speed;
  const double k = params.gain;
  if (agent.identified_at == kNever || t < agent.identified_at)
    return Interval(0.0, d + k);
  if (peer != agent.follower) {
    // Tracked non-followers (optional fusion mode) fall back to the
    // uninformed bound; untracked peers are a contract violation.
    if (agent.estimates.count(peer) != 0) return Interval(0.0, d + k);
    throw std::logic_error("input_estimate: peer untracked after identification");
  }
  if (agent.input_pinned_at == kNever || t < agent.input_pinned_at)
    return Interval(d, d + k);
  return Interval(d, d);
}

namespace {
// Outward padding on the propagated endpoints. Absorbs the rounding drift
// between the truth update and the endpoint arithmetic over long horizons;
// accumulates to ~5e-9 arc units across 5000 steps, far below every other
// scale in the model.
constexpr double kShiftPad = 1e-12;
}  // namespace

MultiInterval predict(const AgentState& agent, int peer,
                      const ControlParams& params, int t) {
  const auto it = agent.estimates.find(peer);
  if (it == agent.estimates.end() || it->second.is_empty())
    throw EstimatorContradiction(agent.id, peer, t + 1);
  const Interval bound = input_estimate(agent, peer, params, t);
  const Interval shift(agent.last_input - bound.hi - kShiftPad,
                       agent.last_input - bound.lo + kShiftPad);
  return it->second.shifted(shift);
}

MultiInterval correct(const MultiInterval& predicted,
                      const MultiInterval& compatible, int agent_id, int peer,
                      int step) {
  MultiInterval result = predicted.intersected(compatible);
  if (result.is_empty()) throw EstimatorContradiction(agent_id, peer, step);
  return result;
}

bool try_identify_follower(AgentState& agent, int step, bool keep_others) {
  if (agent.follower != kNoPeer) return false;
  for (const auto& [candidate, estimate] : agent.estimates) {
    if (estimate.is_empty()) continue;
    const Hull h = estimate.hull();
    if (!(h.lo > 0.0)) continue;
    bool below_everyone = true;
    for (const auto& [other, other_estimate] : agent.estimates) {
      if (other == candidate) continue;
      for (const auto& part : other_estimate.parts()) {
        if (part.lo > 0.0 && !(h.hi < part.lo)) {
          below_everyone = false;
          break;
        }
      }
      if (!below_everyone) break;
    }
    if (!below_everyone) continue;
    agent.follower = candidate;
    agent.identified_at = step;
    agent.hull_at_identify = h;
    if (!keep_others) {
      auto kept = agent.estimates.extract(candidate);
      agent.estimates.clear();
      agent.estimates.insert(std::move(kept));
    }
    return true;
  }
  return false;
}

bool update_input_pin(AgentState& agent, int step) {
  if (agent.follower == kNoPeer || agent.input_pinned_at != kNever)
    return false;
  const Hull h = agent.estimates.at(agent.follower).hull();
  const Hull& ref = agent.hull_at_identify;
  const bool disjoint = h.lo > ref.hi || h.hi < ref.lo;
  if (!disjoint) return false;
  agent.input_pinned_at = step;
  return true;
}

double control_input(const AgentState& agent, const ControlParams& params) {
  if (agent.is_pacemaker) return params.reference_speed;
  if (agent.follower == kNoPeer) return 0.0;
  const double estimate = agent.estimates.at(agent.follower).hull().lo;
  if (params.target_spacing - estimate > 0.0)
    return params.reference_speed + params.gain;
  return params.reference_speed;
}

}  // namespace curveform
