#include "texplore/earliest_arrival.hpp"

#include <algorithm>
#include <queue>

#include "texplore/union_find.hpp"

namespace texplore {

TemporalWalk ReachResult::walk_to(Vertex target) const {
  if (time[target] == kUnreachable) throw std::logic_error("target not reachable");
  TemporalWalk w;
  w.start = source;
  w.start_time = t0;
  std::vector<Move> rev;
  Vertex v = target;
  while (v != source) {
    auto [p, s] = parent[v];
    rev.push_back(Move{s, v});
    v = p;
  }
  w.moves.assign(rev.rbegin(), rev.rend());
  return w;
}

ReachResult earliest_arrival(const StepView& view, Vertex from, Step t0) {
  const TemporalGraph& g = view.graph();
  if (from < 0 || from >= g.n()) throw ShapeError("source vertex out of range");
  if (!view.vertex_visible(from)) throw ShapeError("source vertex not visible in view");
  if (t0 < 0 || t0 > view.size()) throw std::out_of_range("start time outside view range");

  ReachResult res;
  res.source = from;
  res.t0 = t0;
  res.time.assign(g.n(), kUnreachable);
  res.parent.assign(g.n(), {-1, -1});
  res.time[from] = t0;

  using QItem = std::pair<Time, Vertex>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
  pq.emplace(t0, from);
  while (!pq.empty()) {
    auto [t, u] = pq.top();
    pq.pop();
    if (t > res.time[u]) continue;
    if (t >= view.size()) continue;  // no further moves possible
    for (auto [w, e] : g.neighbors(u)) {
      if (!view.vertex_visible(w)) continue;
      auto s = view.next_present(e, t);
      if (!s) continue;
      Time cand = *s + 1;
      if (cand < res.time[w]) {
        res.time[w] = cand;
        res.parent[w] = {u, *s};
        pq.emplace(cand, w);
      }
    }
  }
  return res;
}

ReachResult earliest_arrival(const TemporalGraph& g, Vertex from, Step t0) {
  return earliest_arrival(StepView(g), from, t0);
}

TemporalWalk plan_reach(const StepView& view, Vertex from, Vertex to, Step t0,
                        std::span<const Vertex> H) {
  const TemporalGraph& g = view.graph();
  std::vector<char> in_h(g.n(), 0);
  std::vector<Vertex> hvec;
  for (Vertex v : H) {
    if (v < 0 || v >= g.n()) throw ShapeError("plan_reach: H vertex out of range");
    if (!view.vertex_visible(v)) throw ShapeError("plan_reach: H vertex not visible");
    if (!in_h[v]) {
      in_h[v] = 1;
      hvec.push_back(v);
    }
  }
  if (!in_h[from] || !in_h[to]) throw ShapeError("plan_reach: endpoints must be in H");

  TemporalWalk walk;
  walk.start = from;
  walk.start_time = t0;
  if (from == to) return walk;

  // Index of each H vertex for the per-step union-find.
  std::vector<int> hidx(g.n(), -1);
  for (size_t i = 0; i < hvec.size(); ++i) hidx[hvec[i]] = static_cast<int>(i);
  std::vector<EdgeId> induced;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_h[g.edge(e).u] && in_h[g.edge(e).v]) induced.push_back(e);

  const Step k = static_cast<Step>(hvec.size());
  std::vector<char> reached(g.n(), 0);
  std::vector<std::pair<Vertex, Step>> parent(g.n(), {-1, -1});
  reached[from] = 1;

  for (Step t = t0;; ++t) {
    if (t >= view.size())
      throw LifetimeExhausted("plan_reach: ran past the view while routing");
    if (t - t0 >= k)
      throw std::logic_error("plan_reach: exceeded |H|-1 steps despite connectivity");

    UnionFind uf(static_cast<int>(hvec.size()));
    std::vector<EdgeId> live;
    for (EdgeId e : induced)
      if (view.edge_present(e, t)) {
        live.push_back(e);
        uf.unite(hidx[g.edge(e).u], hidx[g.edge(e).v]);
      }
    if (!uf.connected(hidx[from], hidx[to]))
      throw ReachabilityError("plan_reach: induced subgraph not source-target connected", t);

    // One frontier hop: any vertex adjacent to the reached set becomes reachable.
    std::vector<Vertex> added;
    for (EdgeId e : live) {
      Vertex a = g.edge(e).u, b = g.edge(e).v;
      if (reached[a] && !reached[b]) {
        parent[b] = {a, t};
        added.push_back(b);
      } else if (reached[b] && !reached[a]) {
        parent[a] = {b, t};
        added.push_back(a);
      }
    }
    for (Vertex v : added) reached[v] = 1;
    if (reached[to]) break;
  }

  std::vector<Move> rev;
  Vertex v = to;
  while (v != from) {
    auto [p, s] = parent[v];
    rev.push_back(Move{s, v});
    v = p;
  }
  walk.moves.assign(rev.rbegin(), rev.rend());
  return walk;
}

TemporalWalk plan_reach(const TemporalGraph& g, Vertex from, Vertex to, Step t0,
                        std::span<const Vertex> H) {
  return plan_reach(StepView(g), from, to, t0, H);
}

}  // namespace texplore
