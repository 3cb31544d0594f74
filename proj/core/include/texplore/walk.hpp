#pragma once

#include <optional>
#include <string>
#include <vector>

#include "texplore/temporal_graph.hpp"
#include "texplore/types.hpp"

namespace texplore {

struct Move {
  Step step = 0;
  Vertex to = 0;
  bool operator==(const Move&) const = default;
};

// A time-respecting walk: starting vertex, then moves at strictly increasing
// steps. A move at step i completes at time i+1. Exploration schedules start
// at time 0; segments produced mid-algorithm carry a later start_time.
struct TemporalWalk {
  Vertex start = 0;
  Step start_time = 0;
  std::vector<Move> moves;

  Vertex end() const { return moves.empty() ? start : moves.back().to; }
  Time end_time() const { return moves.empty() ? start_time : moves.back().step + 1; }

  // Appends a continuation segment; it must begin where this walk ends.
  void append(const TemporalWalk& seg);
};

struct MultiAgentSchedule {
  std::vector<TemporalWalk> agents;
};

struct WalkViolation {
  int move_index = -1;
  std::string reason;
};

struct WalkCheck {
  bool ok = false;
  std::optional<WalkViolation> violation;
  Time arrival = 0;  // time of the last first-visit; 0 for a move-free walk
  std::vector<char> visited;
  int visited_count = 0;
};

struct ScheduleCheck {
  bool ok = false;                                        // all walks structurally valid
  std::vector<std::pair<int, WalkViolation>> violations;  // (agent, violation)
  bool coverage = false;                                  // every vertex visited
  Time arrival = kUnreachable;                            // defined when coverage holds
  std::vector<char> visited;
  int visited_count = 0;
};

// Structural check against the graph only: step order, ranges, adjacency,
// presence. Does not constrain the starting vertex.
WalkCheck check_walk(const TemporalGraph& g, const TemporalWalk& w);

// Schedule-context check: additionally requires start vertex and time 0 start.
WalkCheck validate_walk(const Instance& inst, const TemporalWalk& w);

ScheduleCheck validate_schedule(const Instance& inst, const MultiAgentSchedule& sched);

}  // namespace texplore
