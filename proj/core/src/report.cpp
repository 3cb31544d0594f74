#include "texplore/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace texplore {

TraceReport render_trace(const Instance& inst, const MultiAgentSchedule& sched) {
  TraceReport rep;
  ScheduleCheck check = validate_schedule(inst, sched);
  std::ostringstream out;
  if (!check.ok) {
    for (auto& [agent, viol] : check.violations)
      out << "agent " << agent << " move " << viol.move_index << ": " << viol.reason << "\n";
    rep.text = out.str();
    return rep;
  }
  rep.valid = true;

  // Global first visits in (time, agent, move order). Start positions are
  // never marked; the start vertex counts as visited from time 0.
  std::vector<char> marked(inst.graph.n(), 0);
  marked[inst.start] = 1;
  std::vector<std::vector<char>> first(sched.agents.size());
  std::vector<std::tuple<Time, size_t, size_t>> events;
  for (size_t a = 0; a < sched.agents.size(); ++a) {
    const auto& w = sched.agents[a];
    first[a].assign(w.moves.size(), 0);
    for (size_t i = 0; i < w.moves.size(); ++i) events.emplace_back(w.moves[i].step + 1, a, i);
  }
  std::sort(events.begin(), events.end());
  for (auto& [t, a, i] : events) {
    Vertex v = sched.agents[a].moves[i].to;
    if (!marked[v]) {
      marked[v] = 1;
      first[a][i] = 1;
    }
  }

  const bool multi = sched.agents.size() > 1;
  for (size_t a = 0; a < sched.agents.size(); ++a) {
    const auto& w = sched.agents[a];
    if (multi) out << "agent " << a << ":\n";
    out << "t=" << w.start_time << " at " << w.start << "\n";
    for (size_t i = 0; i < w.moves.size(); ++i) {
      out << "t=" << (w.moves[i].step + 1) << " at " << w.moves[i].to;
      if (first[a][i]) out << " *";
      out << "\n";
    }
  }
  rep.text = out.str();
  return rep;
}

}  // namespace texplore
