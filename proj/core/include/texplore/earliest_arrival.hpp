#pragma once

#include <span>
#include <vector>

#include "texplore/step_view.hpp"

namespace texplore {

// Earliest reach times from one (vertex, start time) pair, with predecessor
// data for walk extraction. Times are in the view's own clock.
struct ReachResult {
  Vertex source = 0;
  Step t0 = 0;
  std::vector<Time> time;                         // kUnreachable if not reachable
  std::vector<std::pair<Vertex, Step>> parent;    // (previous vertex, move step)

  bool reachable(Vertex v) const { return time[v] != kUnreachable; }
  TemporalWalk walk_to(Vertex target) const;      // view-time walk ending at target
};

// Frontier expansion with waiting allowed: an agent at u at time t may cross
// any incident edge at the first step >= t where it is present.
ReachResult earliest_arrival(const StepView& view, Vertex from, Step t0);
ReachResult earliest_arrival(const TemporalGraph& g, Vertex from, Step t0);

// Moves an agent from `from` to `to` across the vertex set H, assuming the
// subgraph induced by H connects them at each step from t0 on. Succeeds within
// |H|-1 steps; throws ReachabilityError at the first step where the induced
// subgraph is not from-to connected.
TemporalWalk plan_reach(const StepView& view, Vertex from, Vertex to, Step t0,
                        std::span<const Vertex> H);
TemporalWalk plan_reach(const TemporalGraph& g, Vertex from, Vertex to, Step t0,
                        std::span<const Vertex> H);

}  // namespace texplore
