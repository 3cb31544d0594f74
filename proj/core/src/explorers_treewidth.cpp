#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "texplore/earliest_arrival.hpp"
#include "texplore/explorers.hpp"
#include "texplore/union_find.hpp"

namespace texplore {

namespace {

// Component labels over the subgraph induced by `scope` at one step.
struct ScopeConnectivity {
  const TemporalGraph* g;
  std::vector<Vertex> scope;
  std::vector<int> scope_index;           // vertex -> position in scope, -1 otherwise
  std::vector<std::pair<EdgeId, std::pair<int, int>>> induced;
  std::unordered_map<Step, std::vector<int>> cache;

  ScopeConnectivity(const TemporalGraph& graph, std::vector<Vertex> sc)
      : g(&graph), scope(std::move(sc)), scope_index(graph.n(), -1) {
    for (size_t i = 0; i < scope.size(); ++i) scope_index[scope[i]] = static_cast<int>(i);
    for (EdgeId e = 0; e < g->edge_count(); ++e) {
      int a = scope_index[g->edge(e).u], b = scope_index[g->edge(e).v];
      if (a >= 0 && b >= 0) induced.push_back({e, {a, b}});
    }
  }

  const std::vector<int>& labels(Step t) {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    UnionFind uf(static_cast<int>(scope.size()));
    for (auto& [e, ab] : induced)
      if (g->presence(e).contains(t)) uf.unite(ab.first, ab.second);
    std::vector<int> lab(scope.size());
    for (size_t i = 0; i < scope.size(); ++i) lab[i] = uf.find(static_cast<int>(i));
    return cache.emplace(t, std::move(lab)).first->second;
  }

  bool connected(Step t, Vertex a, Vertex b) {
    const auto& lab = labels(t);
    return lab[scope_index[a]] == lab[scope_index[b]];
  }
};

}  // namespace

TemporalWalk explore_treewidth(const Instance& inst, const TreeDecomposition& td,
                               TreewidthStats* stats) {
  const TemporalGraph& g = inst.graph;
  const int n = g.n();
  auto check = validate_td(n, g.edges(), td);
  if (!check.ok) throw ShapeError("invalid tree decomposition: " + check.problem);

  NiceTd nice = to_nice(td);
  SeparatorPlan plan = build_separator_plan(nice, n, g.edges());
  const Step sqrt_s = static_cast<Step>(std::ceil(std::sqrt(static_cast<double>(n))));

  TreewidthStats local;
  local.components = static_cast<int>(plan.components.size());
  local.separators = static_cast<int>(plan.separator_vertices.size());
  local.selected_bags = static_cast<int>(plan.selected_nodes.size());

  std::vector<Vertex> everyone(n);
  for (Vertex v = 0; v < n; ++v) everyone[v] = v;

  TemporalWalk walk{inst.start, 0, {}};
  std::vector<char> visited(n, 0);
  visited[inst.start] = 1;

  auto count_unvisited = [&](const std::vector<Vertex>& vs) {
    int c = 0;
    for (Vertex v : vs) c += !visited[v];
    return c;
  };

  for (const auto& comp : plan.components) {
    if (count_unvisited(comp.vertices) == 0) continue;
    const auto& seps = comp.adjacent_separators;
    const int a = static_cast<int>(seps.size());
    if (a == 0) continue;  // cleanup pass collects it
    local.max_adjacent = std::max(local.max_adjacent, a);

    std::vector<Vertex> scope = comp.vertices;
    scope.insert(scope.end(), seps.begin(), seps.end());
    std::sort(scope.begin(), scope.end());
    ScopeConnectivity conn(g, scope);
    const Step window_len = 4LL * a * sqrt_s;
    const int phase_cap = static_cast<int>(std::ceil(a * std::log(std::max(2, n)))) + 1;

    int phases = 0;
    while (count_unvisited(comp.vertices) > 0) {
      if (++phases > phase_cap)
        throw std::logic_error("explore_treewidth: phase progress stalled");
      ++local.phases;
      const Step sigma = walk.end_time();
      const int unexplored_before = count_unvisited(comp.vertices);

      // One virtual agent per adjacent separator vertex: out to its post,
      // fetch duty, then home.
      std::vector<TemporalWalk> vwalks(a, TemporalWalk{inst.start, sigma, {}});
      for (int j = 0; j < a; ++j)
        if (seps[j] != inst.start)
          vwalks[j].append(plan_reach(g, inst.start, seps[j], sigma, everyone));
      Step theta = sigma + n;

      std::vector<Vertex> todo;
      for (Vertex v : comp.vertices)
        if (!visited[v]) todo.push_back(v);

      for (Vertex v : todo) {
        // Find a separator vertex connected to v often enough inside a
        // window; slide the window when none qualifies (small-n slack).
        int best = -1;
        while (true) {
          if (theta + window_len > g.lifetime() + 1)
            throw LifetimeExhausted("explore_treewidth: fetch window past lifetime");
          std::vector<Step> counts(a, 0);
          for (Step t = theta; t < theta + window_len; ++t) {
            const auto& lab = conn.labels(t);
            int lv = lab[conn.scope_index[v]];
            for (int j = 0; j < a; ++j)
              if (lab[conn.scope_index[seps[j]]] == lv) ++counts[j];
          }
          for (int j = 0; j < a; ++j)
            if (counts[j] >= 4 * sqrt_s && (best < 0 || counts[j] > counts[best])) best = j;
          if (best >= 0) break;
          ++local.window_slides;
          theta += window_len;
        }

        // Steps where v and the chosen post are connected, enough for a
        // round trip across the scope.
        const Step need = 2 * static_cast<Step>(scope.size()) + 4;
        std::vector<Step> qsteps;
        for (Step t = theta; t <= g.lifetime() && static_cast<Step>(qsteps.size()) < need; ++t)
          if (conn.connected(t, v, seps[best])) qsteps.push_back(t);
        if (static_cast<Step>(qsteps.size()) < need)
          throw LifetimeExhausted("explore_treewidth: not enough connected steps left");
        StepView qview(g, qsteps);
        TemporalWalk leg1 = plan_reach(qview, seps[best], v, 0, scope);
        TemporalWalk leg2 = plan_reach(qview, v, seps[best], leg1.end_time(), scope);
        vwalks[best].append(qview.lift(leg1));
        vwalks[best].append(qview.lift(leg2));
        theta = vwalks[best].end_time();
      }

      for (int j = 0; j < a; ++j)
        if (vwalks[j].end() != inst.start)
          vwalks[j].append(plan_reach(g, vwalks[j].end(), inst.start, theta, everyone));

      // The single agent copies the phase walk that covers the most
      // still-unexplored vertices (ties: lowest agent index).
      int chosen = 0;
      int chosen_cover = -1;
      for (int j = 0; j < a; ++j) {
        std::vector<char> seen = visited;
        int cover = 0;
        for (const Move& mv : vwalks[j].moves)
          if (!seen[mv.to]) {
            seen[mv.to] = 1;
            ++cover;
          }
        if (cover > chosen_cover) {
          chosen = j;
          chosen_cover = cover;
        }
      }
      if (chosen_cover * static_cast<long long>(a) < unexplored_before)
        throw std::logic_error("explore_treewidth: phase coverage below the 1/k share");
      for (const Move& mv : vwalks[chosen].moves) visited[mv.to] = 1;
      walk.append(vwalks[chosen]);
    }
  }

  // Leftovers (separator vertices and skipped pieces): nearest-first hops.
  while (true) {
    Vertex cur = walk.end();
    ReachResult ea = earliest_arrival(g, cur, walk.end_time());
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && ea.reachable(v) && (best == -1 || ea.time[v] < ea.time[best])) best = v;
    if (best == -1) {
      for (Vertex v = 0; v < n; ++v)
        if (!visited[v])
          throw LifetimeExhausted("explore_treewidth: leftover vertex unreachable in time");
      break;
    }
    TemporalWalk seg = ea.walk_to(best);
    for (const Move& mv : seg.moves) visited[mv.to] = 1;
    walk.append(seg);
  }

  if (stats) *stats = local;
  return walk;
}

}  // namespace texplore
