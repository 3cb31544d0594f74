#include "texplore/walk.hpp"

#include <algorithm>

namespace texplore {

void TemporalWalk::append(const TemporalWalk& seg) {
  if (seg.start != end()) throw std::logic_error("walk segment does not start at walk end");
  if (!seg.moves.empty() && !moves.empty() && seg.moves.front().step <= moves.back().step)
    throw std::logic_error("walk segment steps overlap");
  moves.insert(moves.end(), seg.moves.begin(), seg.moves.end());
}

WalkCheck check_walk(const TemporalGraph& g, const TemporalWalk& w) {
  WalkCheck res;
  res.visited.assign(g.n(), 0);
  if (w.start < 0 || w.start >= g.n()) {
    res.violation = WalkViolation{-1, "start vertex out of range"};
    return res;
  }
  res.visited[w.start] = 1;
  res.visited_count = 1;
  res.arrival = 0;
  Vertex pos = w.start;
  Step prev_step = w.start_time - 1;
  for (int i = 0; i < static_cast<int>(w.moves.size()); ++i) {
    const Move& m = w.moves[i];
    if (m.step <= prev_step) {
      res.violation = WalkViolation{i, "step order violated"};
      return res;
    }
    if (m.step < 0 || m.step > g.lifetime()) {
      res.violation = WalkViolation{i, "step outside lifetime"};
      return res;
    }
    if (m.to < 0 || m.to >= g.n()) {
      res.violation = WalkViolation{i, "destination out of range"};
      return res;
    }
    auto e = g.find_edge(pos, m.to);
    if (!e) {
      res.violation = WalkViolation{i, "vertices not adjacent in underlying graph"};
      return res;
    }
    if (!g.edge_present(*e, m.step)) {
      res.violation = WalkViolation{i, "edge absent at move step"};
      return res;
    }
    if (!res.visited[m.to]) {
      res.visited[m.to] = 1;
      ++res.visited_count;
      res.arrival = m.step + 1;
    }
    pos = m.to;
    prev_step = m.step;
  }
  res.ok = true;
  return res;
}

WalkCheck validate_walk(const Instance& inst, const TemporalWalk& w) {
  if (w.start != inst.start) {
    WalkCheck res;
    res.visited.assign(inst.graph.n(), 0);
    res.violation = WalkViolation{-1, "walk does not start at the instance start vertex"};
    return res;
  }
  if (w.start_time != 0) {
    WalkCheck res;
    res.visited.assign(inst.graph.n(), 0);
    res.violation = WalkViolation{-1, "exploration walks start at time 0"};
    return res;
  }
  return check_walk(inst.graph, w);
}

ScheduleCheck validate_schedule(const Instance& inst, const MultiAgentSchedule& sched) {
  ScheduleCheck res;
  const int n = inst.graph.n();
  std::vector<Time> first_visit(n, kUnreachable);
  res.ok = true;
  for (int a = 0; a < static_cast<int>(sched.agents.size()); ++a) {
    WalkCheck wc = validate_walk(inst, sched.agents[a]);
    if (!wc.ok) {
      res.ok = false;
      res.violations.emplace_back(a, *wc.violation);
      continue;
    }
    const TemporalWalk& w = sched.agents[a];
    first_visit[w.start] = std::min(first_visit[w.start], w.start_time);
    for (const Move& m : w.moves)
      first_visit[m.to] = std::min(first_visit[m.to], m.step + 1);
  }
  res.visited.assign(n, 0);
  Time last = 0;
  res.coverage = true;
  for (Vertex v = 0; v < n; ++v) {
    if (first_visit[v] == kUnreachable) {
      res.coverage = false;
    } else {
      res.visited[v] = 1;
      ++res.visited_count;
      last = std::max(last, first_visit[v]);
    }
  }
  res.arrival = res.coverage ? last : kUnreachable;
  return res;
}

}  // namespace texplore
