#include <algorithm>

#include "texplore/earliest_arrival.hpp"
#include "texplore/explorers.hpp"

namespace texplore {

std::vector<Vertex> detect_cycle(const TemporalGraph& g) {
  const int n = g.n();
  if (n < 3 || g.edge_count() != n) throw ShapeError("underlying graph is not a cycle");
  for (int d : g.underlying_degrees())
    if (d != 2) throw ShapeError("underlying graph is not a cycle");
  std::vector<Vertex> ring{0};
  Vertex prev = -1, cur = 0;
  do {
    auto& nb = g.neighbors(cur);
    Vertex next = nb[0].first == prev ? nb[1].first : nb[0].first;
    if (static_cast<int>(ring.size()) > n) throw ShapeError("underlying graph is not a cycle");
    prev = cur;
    cur = next;
    if (cur != 0) ring.push_back(cur);
  } while (cur != 0);
  if (static_cast<int>(ring.size()) != n) throw ShapeError("underlying graph is not a cycle");
  return ring;
}

ChordShape detect_cycle_with_chord(const TemporalGraph& g) {
  const int n = g.n();
  if (n < 4 || g.edge_count() != n + 1)
    throw ShapeError("underlying graph is not a cycle with one chord");
  auto deg = g.underlying_degrees();
  std::vector<Vertex> deg3;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 3)
      deg3.push_back(v);
    else if (deg[v] != 2)
      throw ShapeError("underlying graph is not a cycle with one chord");
  }
  if (deg3.size() != 2) throw ShapeError("underlying graph is not a cycle with one chord");
  auto chord = g.find_edge(deg3[0], deg3[1]);
  if (!chord) throw ShapeError("degree-3 vertices are not adjacent; not a chorded cycle");

  // The remaining edges must form one Hamiltonian cycle.
  ChordShape shape;
  shape.chord = *chord;
  Vertex start = 0;
  std::vector<Vertex> ring{start};
  Vertex prev = -1, cur = start;
  do {
    Vertex next = -1;
    for (auto& [w, e] : g.neighbors(cur)) {
      if (e == *chord || w == prev) continue;
      // Two candidates only at the very first vertex; either ring direction works.
      if (next == -1) next = w;
    }
    if (next == -1) throw ShapeError("underlying graph is not a cycle with one chord");
    prev = cur;
    cur = next;
    if (cur != start) ring.push_back(cur);
    if (static_cast<int>(ring.size()) > n)
      throw ShapeError("underlying graph is not a cycle with one chord");
  } while (cur != start);
  if (static_cast<int>(ring.size()) != n)
    throw ShapeError("chord removal does not leave a spanning cycle");
  shape.ring = std::move(ring);
  for (int i = 0; i < n; ++i) {
    if (shape.ring[i] == deg3[0] || shape.ring[i] == deg3[1]) {
      if (shape.ring_pos_a < 0)
        shape.ring_pos_a = i;
      else
        shape.ring_pos_b = i;
    }
  }
  int gap = shape.ring_pos_b - shape.ring_pos_a;
  if (gap == 1 || gap == n - 1) throw ShapeError("chord endpoints adjacent on the cycle");
  return shape;
}

namespace {

// Edge ids along the ring: ring_edge[i] joins ring[i] and ring[i+1 mod k].
std::vector<EdgeId> ring_edges(const TemporalGraph& g, const std::vector<Vertex>& ring) {
  std::vector<EdgeId> out;
  const int k = static_cast<int>(ring.size());
  for (int i = 0; i < k; ++i) {
    auto e = g.find_edge(ring[i], ring[(i + 1) % k]);
    if (!e) throw ShapeError("ring edge missing from underlying graph");
    out.push_back(*e);
  }
  return out;
}

struct SweepAgent {
  int pos;        // ring index
  int moves = 0;  // ring steps taken
  TemporalWalk walk;
};

// Two-direction sweep on a ring within a view. Returns the walk (in view
// time) of whichever virtual agent first covers the whole ring.
TemporalWalk cycle_sweep(const StepView& view, const std::vector<Vertex>& ring, int start_idx,
                         Step t0) {
  const TemporalGraph& g = view.graph();
  const int k = static_cast<int>(ring.size());
  auto re = ring_edges(g, ring);
  auto fwd = [&](int i) { return (i + 1) % k; };
  auto bwd = [&](int i) { return (i + k - 1) % k; };

  SweepAgent cw{start_idx, 0, TemporalWalk{ring[start_idx], t0, {}}};
  SweepAgent ccw{start_idx, 0, TemporalWalk{ring[start_idx], t0, {}}};

  for (Step t = t0;; ++t) {
    if (cw.moves >= k - 1) return cw.walk;
    if (ccw.moves >= k - 1) return ccw.walk;
    if (t >= view.size())
      throw LifetimeExhausted("cycle sweep ran out of steps");

    EdgeId cw_edge = re[cw.pos];
    EdgeId ccw_edge = re[bwd(ccw.pos)];
    bool cw_ok = view.edge_present(cw_edge, t);
    bool ccw_ok = view.edge_present(ccw_edge, t);

    if (!cw_ok && !ccw_ok) {
      if (cw_edge != ccw_edge)
        throw ReachabilityError(
            "two ring edges absent in one step; instance is not an always-connected ring",
            view.at(t));
      // Both sweeps stall on the same absent edge. If it returns within the
      // next k steps they pass each other; otherwise every other ring edge is
      // present throughout, and the clockwise agent closes the loop backwards
      // with k-1 consecutive moves.
      auto back = view.next_present(cw_edge, t);
      if (back && *back < t + k) {
        cw.walk.moves.push_back(Move{*back, ring[fwd(cw.pos)]});
        cw.pos = fwd(cw.pos);
        ++cw.moves;
        ccw.walk.moves.push_back(Move{*back, ring[bwd(ccw.pos)]});
        ccw.pos = bwd(ccw.pos);
        ++ccw.moves;
        t = *back;
        continue;
      }
      if (t + (k - 1) > view.size())
        throw LifetimeExhausted("cycle sweep ran out of steps during turnaround");
      for (int j = 0; j < k - 1; ++j) {
        Step s = t + j;
        EdgeId e = re[bwd(cw.pos)];
        if (!view.edge_present(e, s))
          throw ReachabilityError("ring edge absent during turnaround window", view.at(s));
        cw.walk.moves.push_back(Move{s, ring[bwd(cw.pos)]});
        cw.pos = bwd(cw.pos);
      }
      return cw.walk;
    }
    if (cw_ok) {
      cw.walk.moves.push_back(Move{t, ring[fwd(cw.pos)]});
      cw.pos = fwd(cw.pos);
      ++cw.moves;
    }
    if (ccw_ok) {
      ccw.walk.moves.push_back(Move{t, ring[bwd(ccw.pos)]});
      ccw.pos = bwd(ccw.pos);
      ++ccw.moves;
    }
  }
}

}  // namespace

TemporalWalk explore_cycle_3n(const Instance& inst) {
  auto ring = detect_cycle(inst.graph);
  int start_idx = static_cast<int>(
      std::find(ring.begin(), ring.end(), inst.start) - ring.begin());
  StepView view(inst.graph);
  return cycle_sweep(view, ring, start_idx, 0);
}

CycleOptimalResult cycle_optimal(const Instance& inst) {
  const TemporalGraph& g = inst.graph;
  auto ring = detect_cycle(g);
  const int k = static_cast<int>(ring.size());
  auto re = ring_edges(g, ring);
  int start_idx = static_cast<int>(std::find(ring.begin(), ring.end(), inst.start) - ring.begin());

  CycleOptimalResult best;

  // One schedule type per direction and turnaround distance: advance `turn`
  // ring steps in `dir`, then sweep the other way until everything is seen.
  // Moving whenever the next edge is present dominates any same-shape walk.
  for (int dir = 0; dir < 2; ++dir) {
    for (int turn = 0; turn <= k - 1; ++turn) {
      TemporalWalk w{inst.start, 0, {}};
      int pos = start_idx;
      int done = 1;
      std::vector<char> visited(k, 0);
      visited[start_idx] = 1;
      int phase_moves = 0;
      bool phase2 = turn == 0;
      bool complete = k == 1;
      for (Step t = 0; t <= g.lifetime() && !complete; ++t) {
        int step_dir = phase2 ? 1 - dir : dir;
        EdgeId edge = step_dir == 0 ? re[pos] : re[(pos + k - 1) % k];
        if (!g.presence(edge).contains(t)) continue;
        pos = step_dir == 0 ? (pos + 1) % k : (pos + k - 1) % k;
        w.moves.push_back(Move{t, ring[pos]});
        if (!visited[pos]) {
          visited[pos] = 1;
          ++done;
        }
        if (!phase2) {
          if (++phase_moves == turn) phase2 = true;
        }
        complete = done == k;
      }
      if (!complete) continue;
      Time arrival = w.moves.empty() ? 0 : w.moves.back().step + 1;
      if (arrival < best.arrival) {
        best.arrival = arrival;
        best.walk = std::move(w);
        best.complete = true;
      }
    }
  }
  return best;
}

TemporalWalk explore_chord(const Instance& inst) {
  const TemporalGraph& g = inst.graph;
  auto shape = detect_cycle_with_chord(g);
  const int n = g.n();
  const Step horizon = 10LL * n;
  if (g.lifetime() + 1 < horizon)
    throw LifetimeExhausted("explore_chord needs lifetime >= 10n");

  // Chord presence census over [0, 10n).
  std::vector<Step> chord_present, chord_absent;
  {
    const PresencePattern& p = g.presence(shape.chord);
    for (Step t = 0; t < horizon; ++t)
      (p.contains(t) ? chord_present : chord_absent).push_back(t);
  }

  const int a = shape.ring_pos_a, b = shape.ring_pos_b;
  // Sub-ring through the chord: ring positions a..b plus the chord edge, and
  // its complement b..a (wrapping) plus the chord edge.
  std::vector<Vertex> inner(shape.ring.begin() + a, shape.ring.begin() + b + 1);
  std::vector<Vertex> outer;
  for (int i = b; i != a; i = (i + 1) % n) outer.push_back(shape.ring[i]);
  outer.push_back(shape.ring[a]);

  if (static_cast<Step>(chord_present.size()) > 7LL * n) {
    auto& first_ring = [&]() -> std::vector<Vertex>& {
      for (Vertex v : inner)
        if (v == inst.start) return inner;
      return outer;
    }();
    auto& second_ring = (&first_ring == &inner) ? outer : inner;

    StepView view1(g, chord_present);
    int idx1 = static_cast<int>(
        std::find(first_ring.begin(), first_ring.end(), inst.start) - first_ring.begin());
    TemporalWalk w = view1.lift(cycle_sweep(view1, first_ring, idx1, 0));
    w.start_time = 0;  // the agent waits at the start until the first useful step

    // Cross to the other sub-cycle (its rings share the chord endpoints).
    Vertex target = std::min(shape.ring[a], shape.ring[b]);
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    if (w.end() != target) w.append(plan_reach(g, w.end(), target, w.end_time(), all));

    std::vector<Step> later;
    for (Step t : chord_present)
      if (t >= w.end_time()) later.push_back(t);
    StepView view2(g, later);
    int idx2 = static_cast<int>(
        std::find(second_ring.begin(), second_ring.end(), target) - second_ring.begin());
    w.append(view2.lift(cycle_sweep(view2, second_ring, idx2, 0)));
    return w;
  }

  // Chord mostly absent: at those steps the instance is a plain temporal
  // cycle with at most one missing edge.
  StepView view(g, chord_absent);
  int idx = static_cast<int>(
      std::find(shape.ring.begin(), shape.ring.end(), inst.start) - shape.ring.begin());
  TemporalWalk w = view.lift(cycle_sweep(view, shape.ring, idx, 0));
  w.start_time = 0;
  return w;
}

}  // namespace texplore
