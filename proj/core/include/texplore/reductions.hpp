#pragma once

#include <functional>
#include <string>
#include <vector>

#include "texplore/temporal_graph.hpp"
#include "texplore/walk.hpp"

namespace texplore {

// Produces, for a given phase start step, a k-agent schedule from the start
// vertex whose walks move at steps >= the given start and jointly visit every
// vertex. Recomputed per phase because temporal graphs need not repeat.
using PhaseBuilder = std::function<MultiAgentSchedule(Step)>;

struct CompressTrace {
  struct Phase {
    Step start = 0;
    Step horizon = 0;  // exploration span of this phase, excluding return legs
    int chosen = -1;
    int unexplored_before = 0;
    int covered = 0;  // newly covered vertices by the chosen agent
  };
  std::vector<Phase> phases;
  Step t_max = 0;  // max phase horizon
  int k = 0;
  Time arrival = 0;
};

// Multi-agent to single-agent compression: phases of (t + n) steps in which
// the one real agent copies whichever virtual agent covers the most still
// unexplored vertices, then everyone returns to the start.
TemporalWalk multi_to_single(const Instance& inst, int k, const PhaseBuilder& builder,
                             CompressTrace* trace = nullptr);

struct ProgressAudit {
  bool ok = false;
  std::string problem;
};

// Verifies the per-phase pigeonhole: each phase's chosen agent covered at
// least a 1/k share of the vertices unexplored at its start.
ProgressAudit progress_per_phase_audit(const CompressTrace& trace);

struct ContractionResult {
  TemporalGraph graph;
  std::vector<Vertex> vertex_map;  // original vertex -> contracted vertex
};

// Contracts the listed underlying edges; parallel edges merge with the union
// of their presences, self-loops drop. New ids follow ascending smallest
// original member.
ContractionResult contract_edges(const TemporalGraph& g, const std::vector<Edge>& contractions);

// Rewrites a walk on the pre-contraction graph into one on the contracted
// graph: moves along contracted edges vanish, everything else maps through.
TemporalWalk transfer_schedule(const TemporalWalk& walk, const std::vector<Vertex>& vertex_map);

// The pre-contraction realization a contracted realization lifts to:
// contracted edges always present, every other edge copying its image's
// presence.
TemporalGraph lift_realization(int n, const std::vector<Edge>& underlying,
                               const std::vector<Vertex>& vertex_map,
                               const TemporalGraph& contracted);

}  // namespace texplore
