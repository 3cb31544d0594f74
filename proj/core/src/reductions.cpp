#include "texplore/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "texplore/earliest_arrival.hpp"
#include "texplore/union_find.hpp"

namespace texplore {

TemporalWalk multi_to_single(const Instance& inst, int k, const PhaseBuilder& builder,
                             CompressTrace* trace) {
  const TemporalGraph& g = inst.graph;
  const int n = g.n();
  if (k < 1) throw ShapeError("multi_to_single needs k >= 1");
  std::vector<Vertex> everyone(n);
  for (Vertex v = 0; v < n; ++v) everyone[v] = v;

  CompressTrace local;
  local.k = k;

  TemporalWalk x{inst.start, 0, {}};
  std::vector<char> visited(n, 0);
  visited[inst.start] = 1;
  int unexplored = n - 1;
  const int phase_cap = static_cast<int>(std::ceil(k * std::log(std::max(2, n)))) + 1;

  Step sigma = 0;
  while (unexplored > 0) {
    if (static_cast<int>(local.phases.size()) >= phase_cap)
      throw std::logic_error("multi_to_single: phase cap exceeded; builder breaks its contract");

    MultiAgentSchedule phase = builder(sigma);
    if (static_cast<int>(phase.agents.size()) != k)
      throw ShapeError("phase builder returned a wrong agent count");
    std::vector<char> joint(n, 0);
    joint[inst.start] = 1;
    Step horizon = 0;
    for (auto& w : phase.agents) {
      if (w.start != inst.start)
        throw ShapeError("phase builder walk does not start at the start vertex");
      if (!w.moves.empty() && w.moves.front().step < sigma)
        throw ShapeError("phase builder walk moves before the phase start");
      for (const Move& m : w.moves) joint[m.to] = 1;
      horizon = std::max(horizon, w.end_time() - sigma);
    }
    for (Vertex v = 0; v < n; ++v)
      if (!joint[v]) throw ShapeError("phase builder schedule does not cover every vertex");

    // Return legs: everyone moves back to the start vertex.
    for (auto& w : phase.agents)
      if (w.end() != inst.start)
        w.append(plan_reach(g, w.end(), inst.start, sigma + horizon, everyone));

    int chosen = 0, chosen_cover = -1;
    for (int j = 0; j < k; ++j) {
      std::vector<char> seen = visited;
      int cover = 0;
      for (const Move& m : phase.agents[j].moves)
        if (!seen[m.to]) {
          seen[m.to] = 1;
          ++cover;
        }
      if (cover > chosen_cover) {
        chosen = j;
        chosen_cover = cover;
      }
    }

    CompressTrace::Phase ph;
    ph.start = sigma;
    ph.horizon = horizon;
    ph.chosen = chosen;
    ph.unexplored_before = unexplored;
    ph.covered = chosen_cover;
    local.phases.push_back(ph);
    local.t_max = std::max(local.t_max, horizon);

    for (const Move& m : phase.agents[chosen].moves)
      if (!visited[m.to]) {
        visited[m.to] = 1;
        --unexplored;
      }
    x.append(phase.agents[chosen]);
    sigma = sigma + horizon + n;
  }

  // Trailing moves after the last first-visit add nothing.
  Time arrival = 0;
  {
    std::vector<char> seen(n, 0);
    seen[inst.start] = 1;
    size_t cut = 0;
    for (size_t i = 0; i < x.moves.size(); ++i)
      if (!seen[x.moves[i].to]) {
        seen[x.moves[i].to] = 1;
        arrival = x.moves[i].step + 1;
        cut = i + 1;
      }
    x.moves.resize(cut);
  }
  local.arrival = arrival;
  if (trace) *trace = std::move(local);
  return x;
}

ProgressAudit progress_per_phase_audit(const CompressTrace& trace) {
  for (size_t i = 0; i < trace.phases.size(); ++i) {
    const auto& ph = trace.phases[i];
    int share = (ph.unexplored_before + trace.k - 1) / trace.k;
    if (ph.covered < share)
      return {false, "phase " + std::to_string(i) + " covered " + std::to_string(ph.covered) +
                         " < required share " + std::to_string(share)};
  }
  return {true, ""};
}

ContractionResult contract_edges(const TemporalGraph& g, const std::vector<Edge>& contractions) {
  const int n = g.n();
  UnionFind uf(n);
  for (auto& ce : contractions) {
    if (!g.find_edge(ce.u, ce.v))
      throw ShapeError("contraction edge {" + std::to_string(ce.u) + "," + std::to_string(ce.v) +
                       "} not in the underlying graph");
    uf.unite(ce.u, ce.v);
  }
  std::vector<Vertex> vmap(n, -1);
  int next_id = 0;
  for (Vertex v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (vmap[r] == -1) vmap[r] = next_id++;
    vmap[v] = vmap[r];
  }

  // Merge parallel edges with presence union; drop self-loops.
  std::map<std::pair<Vertex, Vertex>, PresencePattern> merged;
  std::vector<std::pair<Vertex, Vertex>> order;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex u = vmap[g.edge(e).u], v = vmap[g.edge(e).v];
    if (u == v) continue;
    auto key = std::minmax(u, v);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, g.presence(e));
      order.push_back(key);
    } else {
      it->second = presence_union(it->second, g.presence(e), g.lifetime());
    }
  }
  std::vector<Edge> edges;
  std::vector<PresencePattern> presence;
  for (auto& key : order) {
    edges.push_back({key.first, key.second});
    presence.push_back(merged.at(key));
  }
  return {TemporalGraph(next_id, std::move(edges), std::move(presence), g.lifetime()),
          std::move(vmap)};
}

TemporalWalk transfer_schedule(const TemporalWalk& walk, const std::vector<Vertex>& vertex_map) {
  TemporalWalk out;
  out.start = vertex_map.at(walk.start);
  out.start_time = walk.start_time;
  Vertex cur = out.start;
  for (const Move& m : walk.moves) {
    Vertex to = vertex_map.at(m.to);
    if (to == cur) continue;  // move along a contracted edge
    out.moves.push_back(Move{m.step, to});
    cur = to;
  }
  return out;
}

TemporalGraph lift_realization(int n, const std::vector<Edge>& underlying,
                               const std::vector<Vertex>& vertex_map,
                               const TemporalGraph& contracted) {
  std::vector<Edge> edges;
  std::vector<PresencePattern> presence;
  for (auto& e : underlying) {
    Vertex u = vertex_map.at(e.u), v = vertex_map.at(e.v);
    edges.push_back(e);
    if (u == v) {
      presence.push_back(PresencePattern::always());
    } else {
      auto img = contracted.find_edge(u, v);
      if (!img) throw ShapeError("lift_realization: image edge missing in contracted graph");
      presence.push_back(contracted.presence(*img));
    }
  }
  return TemporalGraph(n, std::move(edges), std::move(presence), contracted.lifetime());
}

}  // namespace texplore
