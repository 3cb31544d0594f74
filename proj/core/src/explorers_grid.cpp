#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "texplore/earliest_arrival.hpp"
#include "texplore/explorers.hpp"
#include "texplore/union_find.hpp"

namespace texplore {

GridShape detect_grid_2xn(const TemporalGraph& g) {
  const int n = g.n();
  if (n < 2 || n % 2 != 0) throw ShapeError("underlying graph is not a 2xN grid");
  const int cols = n / 2;
  if (g.edge_count() != 3 * cols - 2) throw ShapeError("underlying graph is not a 2xN grid");

  GridShape shape;
  shape.cols = cols;
  if (cols == 1) {
    if (!g.find_edge(0, 1)) throw ShapeError("underlying graph is not a 2xN grid");
    shape.columns.push_back({0, 1});
    return shape;
  }

  auto deg = g.underlying_degrees();
  Vertex corner = -1;
  for (Vertex v = 0; v < n && corner < 0; ++v)
    if (deg[v] == 2) corner = v;
  if (corner < 0) throw ShapeError("underlying graph is not a 2xN grid");

  // Try both interpretations of the corner's two neighbors (which one is the
  // row partner) and keep the one that walks out a full grid.
  auto& nb = g.neighbors(corner);
  for (int attempt = 0; attempt < 2; ++attempt) {
    Vertex partner = nb[attempt].first;
    Vertex ahead = nb[1 - attempt].first;
    std::vector<std::array<Vertex, 2>> columns{{corner, partner}};
    std::vector<char> used(n, 0);
    used[corner] = used[partner] = 1;
    Vertex top = corner, bot = partner, next_top = ahead;
    bool ok = g.find_edge(top, bot).has_value();
    while (ok && static_cast<int>(columns.size()) < cols) {
      // next_top continues the top row; the bottom row follows underneath.
      Vertex next_bot = -1;
      for (auto& [w, e] : g.neighbors(bot))
        if (w != top && !used[w] && g.find_edge(next_top, w)) next_bot = w;
      if (next_top < 0 || next_bot < 0 || used[next_top] || next_top == next_bot) {
        ok = false;
        break;
      }
      used[next_top] = used[next_bot] = 1;
      columns.push_back({next_top, next_bot});
      top = next_top;
      bot = next_bot;
      next_top = -1;
      for (auto& [w, e] : g.neighbors(top))
        if (!used[w] && w != bot && !g.find_edge(bot, w).has_value()) next_top = w;
      if (static_cast<int>(columns.size()) == cols) break;
      if (next_top < 0) ok = false;
    }
    if (!ok || static_cast<int>(columns.size()) != cols) continue;
    // Every grid edge must be accounted for: columns, and row successors.
    int found = 0;
    for (int c = 0; c < cols; ++c) {
      if (g.find_edge(columns[c][0], columns[c][1])) ++found;
      if (c + 1 < cols) {
        if (g.find_edge(columns[c][0], columns[c + 1][0])) ++found;
        if (g.find_edge(columns[c][1], columns[c + 1][1])) ++found;
      }
    }
    if (found != g.edge_count()) continue;
    shape.columns = std::move(columns);
    return shape;
  }
  throw ShapeError("underlying graph is not a 2xN grid");
}

namespace {

Step grid_budget(int m, std::map<int, Step>& memo) {
  if (m <= 1) return 2;
  if (m == 2) return 4;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  int half = (m + 1) / 2;
  Step b = 2 * (2LL * m + grid_budget(half, memo) + half + 2);
  memo[m] = b;
  return b;
}

struct GridRun {
  const TemporalGraph* g;
  const GridShape* shape;
  std::vector<TemporalWalk> walks;
  std::vector<Vertex> pos;
  std::map<int, Step> bmemo;
  int max_depth = 0;

  Vertex vertex_at(int row, int col) const { return shape->columns[col][row]; }

  std::vector<Vertex> column_vertices(int lo, int hi) const {
    std::vector<Vertex> vs;
    for (int c = lo; c <= hi; ++c) {
      vs.push_back(vertex_at(0, c));
      vs.push_back(vertex_at(1, c));
    }
    return vs;
  }

  void route(const StepView& window, int agent, Vertex target, std::span<const Vertex> H) {
    if (pos[agent] == target) return;
    TemporalWalk seg = window.lift(plan_reach(window, pos[agent], target, 0, H));
    walks[agent].append(seg);
    pos[agent] = target;
  }

  // Explores columns [gsLo, gsHi] with the agent pool, inside the subgrid
  // [gpLo, gpHi] whose induced snapshots connect every pair of [gsLo, gsHi]
  // vertices at each view step. Returns the number of view steps consumed.
  Step explore(const StepView& view, int gpLo, int gpHi, int gsLo, int gsHi,
               std::span<const int> pool, int depth) {
    max_depth = std::max(max_depth, depth + 1);
    if (gsLo > gsHi) return 0;
    const int m = gpHi - gpLo + 1;
    const int n2 = gsHi - gsLo + 1;
    auto gp_vertices = column_vertices(gpLo, gpHi);

    if (n2 <= 2) {
      if (view.size() < 2 * m)
        throw LifetimeExhausted("grid exploration ran out of steps (base placement)");
      StepView window = [&] {
        std::vector<Step> idx;
        for (Step s = 0; s < 2 * m; ++s) idx.push_back(s);
        return view.restrict_steps(idx);
      }();
      auto targets = column_vertices(gsLo, gsHi);
      if (pool.size() < targets.size())
        throw std::logic_error("grid agent pool exhausted at base case");
      for (size_t i = 0; i < targets.size(); ++i) route(window, pool[i], targets[i], gp_vertices);
      return 2 * m;
    }

    if (pool.size() < 4) throw std::logic_error("grid agent pool exhausted");
    const int half_budget_key = (m + 1) / 2;
    const Step sweep_len = grid_budget(half_budget_key, bmemo) + half_budget_key + 2;

    Step t = 0;
    const int half = (n2 + 1) / 2;
    for (int side = 0; side < 2; ++side) {
      const int hLo = side == 0 ? gsLo : gsLo + half;
      const int hHi = side == 0 ? gsLo + half - 1 : gsHi;
      if (hLo > hHi) continue;

      if (view.size() < t + 2 * m + sweep_len)
        throw LifetimeExhausted("grid exploration ran out of steps (sweep window)");

      // Simulate the corner sweeps offline over the sweep window; they depend
      // only on edge presence, not on the other agents.
      const Step sweep_start = t + 2 * m;
      int lcol = hLo, rcol = hHi;
      std::vector<std::pair<Step, int>> lmoves, rmoves;
      std::vector<Step> still;
      for (Step s = sweep_start; s < sweep_start + sweep_len; ++s) {
        if (rcol - lcol <= 1) {
          still.push_back(s);
          continue;
        }
        auto horiz_ok = [&](int from_col, int to_col) {
          auto e0 = g->find_edge(vertex_at(0, from_col), vertex_at(0, to_col));
          auto e1 = g->find_edge(vertex_at(1, from_col), vertex_at(1, to_col));
          return view.edge_present(*e0, s) && view.edge_present(*e1, s);
        };
        bool moved = false;
        if (horiz_ok(lcol, lcol + 1)) {
          ++lcol;
          lmoves.emplace_back(s, lcol);
          moved = true;
        }
        if (rcol - lcol >= 1 && horiz_ok(rcol, rcol - 1)) {
          --rcol;
          rmoves.emplace_back(s, rcol);
          moved = true;
        }
        if (!moved) still.push_back(s);
      }
      const int gapLo = lcol + 1, gapHi = rcol - 1;

      // Placement: four corner agents plus, when a middle gap remains, the
      // rest of the pool at the gap's middle column.
      {
        StepView window = [&] {
          std::vector<Step> idx;
          for (Step s = t; s < t + 2 * m; ++s) idx.push_back(s);
          return view.restrict_steps(idx);
        }();
        route(window, pool[0], vertex_at(0, hLo), gp_vertices);
        route(window, pool[1], vertex_at(1, hLo), gp_vertices);
        route(window, pool[2], vertex_at(0, hHi), gp_vertices);
        route(window, pool[3], vertex_at(1, hHi), gp_vertices);
        if (gapLo <= gapHi) {
          const int mid = (gapLo + gapHi) / 2;
          for (size_t i = 4; i < pool.size(); ++i)
            route(window, pool[i], vertex_at(0, mid), gp_vertices);
        }
      }

      // Execute the sweeps.
      auto sweep_move = [&](int agent, int row, Step s, int col) {
        Vertex tgt = vertex_at(row, col);
        walks[agent].append(TemporalWalk{pos[agent], view.at(s), {Move{view.at(s), tgt}}});
        pos[agent] = tgt;
      };
      for (auto& [s, col] : lmoves) {
        sweep_move(pool[0], 0, s, col);
        sweep_move(pool[1], 1, s, col);
      }
      for (auto& [s, col] : rmoves) {
        sweep_move(pool[2], 0, s, col);
        sweep_move(pool[3], 1, s, col);
      }

      // Recurse on the unswept middle during the still steps, after checking
      // the connectivity premise at each of them. A violation is reported,
      // never patched around.
      if (gapLo <= gapHi) {
        auto hp_vertices = column_vertices(hLo, hHi);
        std::vector<char> in_hp(g->n(), 0);
        for (Vertex v : hp_vertices) in_hp[v] = 1;
        for (Step s : still) {
          UnionFind uf(g->n());
          for (Vertex v : hp_vertices)
            for (auto& [w, e] : g->neighbors(v))
              if (in_hp[w] && view.edge_present(e, s)) uf.unite(v, w);
          Vertex anchor = vertex_at(0, gapLo);
          for (int c = gapLo; c <= gapHi; ++c)
            for (int r = 0; r < 2; ++r)
              if (!uf.connected(anchor, vertex_at(r, c)))
                throw ReachabilityError(
                    "grid recursion premise violated: middle columns disconnected "
                    "inside the half at a still step",
                    view.at(s));
        }
        StepView child = view.restrict_steps(still);
        explore(child, hLo, hHi, gapLo, gapHi, pool.subspan(4), depth + 1);
      }

      t += 2 * m + sweep_len;
    }
    return t;
  }
};

MultiAgentSchedule run_grid(const Instance& inst, Step start_step, GridStats* stats) {
  const TemporalGraph& g = inst.graph;
  GridShape shape = detect_grid_2xn(g);
  const int cols = shape.cols;
  const int agents = std::max(4, 4 * static_cast<int>(std::ceil(std::log2(std::max(2, cols)))));

  GridRun run;
  run.g = &g;
  run.shape = &shape;
  run.walks.assign(agents, TemporalWalk{inst.start, start_step, {}});
  run.pos.assign(agents, inst.start);

  StepView view = start_step == 0 ? StepView(g) : StepView::suffix(g, start_step);
  std::vector<int> pool(agents);
  for (int i = 0; i < agents; ++i) pool[i] = i;
  run.explore(view, 0, cols - 1, 0, cols - 1, pool, 0);

  if (stats) {
    stats->agents = agents;
    stats->depth = run.max_depth;
    stats->budget = grid_budget(cols, run.bmemo);
  }
  MultiAgentSchedule sched;
  sched.agents = std::move(run.walks);
  return sched;
}

}  // namespace

MultiAgentSchedule explore_grid_multi(const Instance& inst, GridStats* stats) {
  return run_grid(inst, 0, stats);
}

MultiAgentSchedule explore_grid_multi_from(const Instance& inst, Step start, GridStats* stats) {
  return run_grid(inst, start, stats);
}

}  // namespace texplore
