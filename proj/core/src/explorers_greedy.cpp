#include "texplore/earliest_arrival.hpp"
#include "texplore/explorers.hpp"

namespace texplore {

TemporalWalk explore_greedy(const Instance& inst) {
  const TemporalGraph& g = inst.graph;
  TemporalWalk w{inst.start, 0, {}};
  std::vector<char> visited(g.n(), 0);
  visited[inst.start] = 1;
  int left = g.n() - 1;
  while (left > 0) {
    ReachResult ea = earliest_arrival(g, w.end(), w.end_time());
    Vertex best = -1;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!visited[v] && ea.reachable(v) && (best == -1 || ea.time[v] < ea.time[best]))
        best = v;
    if (best == -1)
      throw LifetimeExhausted("explore_greedy: no unvisited vertex reachable in time");
    TemporalWalk seg = ea.walk_to(best);
    for (const Move& m : seg.moves)
      if (!visited[m.to]) {
        visited[m.to] = 1;
        --left;
      }
    w.append(seg);
  }
  return w;
}

}  // namespace texplore
