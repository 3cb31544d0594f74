#pragma once

#include <optional>
#include <vector>

#include "texplore/step_view.hpp"
#include "texplore/temporal_graph.hpp"
#include "texplore/tree_decomposition.hpp"
#include "texplore/walk.hpp"

namespace texplore {

// ---------------------------------------------------------------------------
// Shape detection helpers
// ---------------------------------------------------------------------------

// Vertices of the underlying cycle in ring order, starting at vertex 0's
// smallest neighbor side. Throws ShapeError when the underlying graph is not
// a single cycle.
std::vector<Vertex> detect_cycle(const TemporalGraph& g);

struct ChordShape {
  std::vector<Vertex> ring;  // the outer cycle in ring order
  EdgeId chord = -1;
  int ring_pos_a = -1;  // chord endpoints as ring positions, a < b
  int ring_pos_b = -1;
};
ChordShape detect_cycle_with_chord(const TemporalGraph& g);

struct GridShape {
  int cols = 0;
  std::vector<std::array<Vertex, 2>> columns;  // columns[c] = {row0, row1}
};
GridShape detect_grid_2xn(const TemporalGraph& g);

// ---------------------------------------------------------------------------
// Explorers
// ---------------------------------------------------------------------------

// Baseline: repeatedly extend the walk to the unvisited vertex with the
// minimum earliest-arrival time (ties: smallest id).
TemporalWalk explore_greedy(const Instance& inst);

// Temporal cycle exploration within 3n steps: two virtual sweeps, clockwise
// and counterclockwise; when both stall on the same absent edge, either the
// edge returns within n steps (they pass each other) or the clockwise agent
// turns around and closes the loop the other way.
TemporalWalk explore_cycle_3n(const Instance& inst);

struct CycleOptimalResult {
  TemporalWalk walk;
  Time arrival = kUnreachable;
  bool complete = false;  // false when no candidate finished within the lifetime
};

// Foremost exploration of a temporal cycle: simulates every schedule shape
// (each direction, each turnaround vertex) greedily and takes the best.
CycleOptimalResult cycle_optimal(const Instance& inst);

// Cycle plus one chord in O(n) steps: counts chord presence over [0, 10n);
// a mostly-present chord splits the work into the two sub-cycles, otherwise
// the outer cycle is explored on the chord-absent steps.
TemporalWalk explore_chord(const Instance& inst);

struct GridStats {
  int agents = 0;
  int depth = 0;
  Step budget = 0;
};

// 2 x n grid exploration with 4*ceil(log2 n) agents: per half, four agents
// sweep from the corners while the remainder recursively explores the columns
// the sweeps will not touch, using only the steps where no sweep moves.
MultiAgentSchedule explore_grid_multi(const Instance& inst, GridStats* stats = nullptr);

// Same procedure started at an arbitrary step (used as a phase builder).
MultiAgentSchedule explore_grid_multi_from(const Instance& inst, Step start,
                                           GridStats* stats = nullptr);

struct TreewidthStats {
  int components = 0;
  int separators = 0;
  int selected_bags = 0;
  int max_adjacent = 0;   // largest adjacent-separator count over components
  long long window_slides = 0;
  int phases = 0;
};

// Exploration via a tree decomposition: separator bags split the graph into
// O(sqrt n) small components; each is explored by one virtual agent per
// adjacent separator vertex fetching component vertices in presence windows,
// then compressed to the single real agent phase by phase.
TemporalWalk explore_treewidth(const Instance& inst, const TreeDecomposition& td,
                               TreewidthStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Regularly present edges
// ---------------------------------------------------------------------------

struct RegularityEstimate {
  std::vector<Step> max_run;       // per edge; 1 for edges with no absence
  std::vector<Step> min_inner_run; // interior runs only; 0 if none
  double c = 0.0;                  // max over edges of max_run/min_inner_run
};

RegularityEstimate estimate_regularity(const TemporalGraph& g);

struct RegularMstResult {
  TemporalWalk walk;
  std::vector<Step> rounded;       // J_e = 2^floor(log2 I_e) per edge
  std::vector<EdgeId> tree;        // MST edge ids
  Step max_wait = 0;               // longest wait at a tour edge
};

// Exploration of a sparse graph with regularly present edges: round the
// per-edge absence bounds down to powers of two, take the minimum spanning
// tree under those weights, and traverse its doubled Euler tour, waiting at
// each endpoint until the next tour edge is present.
// Pass a profile, or nullopt to estimate one from the patterns.
RegularMstResult explore_regular_mst(const Instance& inst,
                                     const std::optional<struct RegularityProfile>& profile);

struct ChargeAudit {
  bool ok = false;
  double max_charge = 0.0;          // largest per-edge accumulated charge
  double bound = 0.0;               // 8c
  long long tree_weight = 0;        // sum of J_e over MST edges
  double tree_weight_bound = 0.0;   // 8c * |E|
  std::vector<double> charge;       // per edge
  int weak_components = 0;          // components whose leaving edges sum below 1/c
};

// Concrete replay of the charging argument that bounds the MST weight: per
// weight level, components of the tree minus that level charge their leaving
// edges; no edge may accumulate more than 8c.
ChargeAudit mst_weight_audit(const Instance& inst, const RegularityProfile& profile);

}  // namespace texplore
