#include "texplore/oracle.hpp"

#include <unordered_map>

#include "texplore/earliest_arrival.hpp"

namespace texplore {

OracleResult exact_optimum(const Instance& inst, int limit) {
  const TemporalGraph& g = inst.graph;
  const int n = g.n();
  if (n > limit)
    throw ShapeError("exact_optimum: instance has " + std::to_string(n) +
                     " vertices, limit is " + std::to_string(limit));
  if (n == 1) return {0, TemporalWalk{inst.start, 0, {}}};

  const size_t full = (size_t{1} << n) - 1;
  std::vector<Time> best(static_cast<size_t>(n) << n, kUnreachable);
  std::vector<Vertex> prev(static_cast<size_t>(n) << n, -1);
  auto idx = [n](size_t mask, Vertex v) { return (static_cast<size_t>(v) << n) | mask; };

  std::unordered_map<uint64_t, std::vector<Time>> ea_memo;
  auto arrivals = [&](Vertex v, Time t) -> const std::vector<Time>& {
    uint64_t key = (static_cast<uint64_t>(v) << 40) | static_cast<uint64_t>(t);
    auto it = ea_memo.find(key);
    if (it == ea_memo.end())
      it = ea_memo.emplace(key, earliest_arrival(g, v, t).time).first;
    return it->second;
  };

  size_t start_mask = size_t{1} << inst.start;
  best[idx(start_mask, inst.start)] = 0;

  for (size_t mask = start_mask; mask <= full; ++mask) {
    if ((mask & start_mask) == 0) continue;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v & 1) == 0) continue;
      Time t = best[idx(mask, v)];
      if (t == kUnreachable) continue;
      if (mask == full) continue;
      const auto& ea = arrivals(v, t);
      for (Vertex u = 0; u < n; ++u) {
        if (mask >> u & 1) continue;
        if (ea[u] == kUnreachable) continue;
        size_t nm = mask | (size_t{1} << u);
        if (ea[u] < best[idx(nm, u)]) {
          best[idx(nm, u)] = ea[u];
          prev[idx(nm, u)] = v;
        }
      }
    }
  }

  Vertex last = -1;
  Time opt = kUnreachable;
  for (Vertex v = 0; v < n; ++v)
    if (best[idx(full, v)] < opt) {
      opt = best[idx(full, v)];
      last = v;
    }
  if (last < 0)
    throw LifetimeExhausted("exact_optimum: exploration infeasible within the lifetime");

  // Witness reconstruction along the predecessor chain.
  std::vector<Vertex> chain;
  size_t mask = full;
  Vertex v = last;
  while (v != inst.start || mask != start_mask) {
    chain.push_back(v);
    Vertex p = prev[idx(mask, v)];
    mask &= ~(size_t{1} << v);
    v = p;
  }
  TemporalWalk w{inst.start, 0, {}};
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    ReachResult ea = earliest_arrival(g, w.end(), w.end_time());
    w.append(ea.walk_to(*it));
  }
  return {opt, std::move(w)};
}

Time exhaustive_enum(const Instance& inst) {
  const TemporalGraph& g = inst.graph;
  const int n = g.n();
  if (n > 7) throw ShapeError("exhaustive_enum: limit is 7 vertices");
  if (g.lifetime() > 64) throw ShapeError("exhaustive_enum: limit is lifetime 64");
  const size_t masks = size_t{1} << n;
  const size_t full = masks - 1;

  // reach[v][mask]: the agent can stand at v at the current time having
  // visited exactly `mask`.
  std::vector<std::vector<char>> reach(n, std::vector<char>(masks, 0));
  reach[inst.start][size_t{1} << inst.start] = 1;
  if (full == (size_t{1} << inst.start)) return 0;

  for (Step t = 0; t <= g.lifetime(); ++t) {
    auto nxt = reach;  // waiting keeps every state alive
    auto snap = g.snapshot(t);
    for (Vertex v = 0; v < n; ++v)
      for (size_t mask = 0; mask < masks; ++mask) {
        if (!reach[v][mask]) continue;
        for (EdgeId e : snap) {
          Vertex a = g.edge(e).u, b = g.edge(e).v;
          if (a != v && b != v) continue;
          Vertex u = a == v ? b : a;
          nxt[u][mask | (size_t{1} << u)] = 1;
        }
      }
    reach.swap(nxt);
    for (Vertex v = 0; v < n; ++v)
      if (reach[v][full]) return t + 1;
  }
  throw LifetimeExhausted("exhaustive_enum: exploration infeasible within the lifetime");
}

}  // namespace texplore
