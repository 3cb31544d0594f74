#pragma once

#include "texplore/temporal_graph.hpp"
#include "texplore/walk.hpp"

namespace texplore {

struct OracleResult {
  Time optimum = 0;
  TemporalWalk witness;
};

// Exact foremost exploration on small instances: dynamic program over
// (visited set, current vertex) states keeping the earliest achievable time,
// with transitions given by earliest-arrival hops. Keeping only the earliest
// time per state is lossless because waiting is allowed, so later starts can
// never reach anything sooner.
OracleResult exact_optimum(const Instance& inst, int limit = 15);

// Independent brute force over per-step actions (wait or cross any present
// edge); used only to certify exact_optimum on tiny instances.
// Requires n <= 7 and lifetime <= 64.
Time exhaustive_enum(const Instance& inst);

}  // namespace texplore
