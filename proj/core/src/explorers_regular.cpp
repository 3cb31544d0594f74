#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "texplore/explorers.hpp"
#include "texplore/generators.hpp"
#include "texplore/union_find.hpp"

namespace texplore {

namespace {

// Maximal absence runs of an edge over [0, L]: gaps between present runs,
// plus the truncated gaps at the boundaries.
struct AbsenceRuns {
  Step longest = 0;         // over all runs, boundary included
  Step shortest_inner = 0;  // interior runs only; 0 when there are none
};

AbsenceRuns absence_runs(const PresencePattern& p, Step L) {
  AbsenceRuns out;
  auto runs = p.present_runs(L);
  if (runs.empty()) {
    out.longest = L + 1;
    return out;
  }
  if (runs.front().first > 0) out.longest = runs.front().first;
  if (runs.back().second < L) out.longest = std::max(out.longest, L - runs.back().second);
  for (size_t i = 1; i < runs.size(); ++i) {
    Step gap = runs[i].first - runs[i - 1].second - 1;
    out.longest = std::max(out.longest, gap);
    out.shortest_inner = out.shortest_inner == 0 ? gap : std::min(out.shortest_inner, gap);
  }
  return out;
}

std::vector<EdgeId> kruskal_tree(const TemporalGraph& g, const std::vector<Step>& weight) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return weight[a] != weight[b] ? weight[a] < weight[b] : a < b;
  });
  UnionFind uf(g.n());
  std::vector<EdgeId> tree;
  for (EdgeId e : order)
    if (uf.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  if (uf.components() != 1) throw ShapeError("underlying graph must be connected");
  return tree;
}

// Profile and rounded weights shared by the explorer and the audit.
struct RegularSetup {
  std::vector<Step> max_run;
  double c = 2.0;
  std::vector<Step> rounded;
};

RegularSetup make_setup(const TemporalGraph& g, const std::optional<RegularityProfile>& profile) {
  if (g.edge_count() > 3 * g.n())
    throw ShapeError("regular exploration enforces |E| <= 3n");
  RegularSetup s;
  if (profile) {
    if (static_cast<int>(profile->max_run.size()) != g.edge_count())
      throw ShapeError("profile size does not match edge count");
    if (profile->c <= 1.0) throw ShapeError("profile constant c must be > 1");
    s.max_run = profile->max_run;
    s.c = profile->c;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (s.max_run[e] < 1) throw ShapeError("profile runs must be >= 1");
      auto runs = absence_runs(g.presence(e), g.lifetime());
      if (runs.longest > s.max_run[e])
        throw ShapeError("regularity verification failure: edge " + std::to_string(e) +
                         " has an absence run of " + std::to_string(runs.longest) +
                         " > " + std::to_string(s.max_run[e]));
      if (runs.shortest_inner > 0 &&
          static_cast<double>(runs.shortest_inner) * s.c < static_cast<double>(s.max_run[e]) - 1e-9)
        throw ShapeError("regularity verification failure: edge " + std::to_string(e) +
                         " has an absence run shorter than its bound over c");
    }
  } else {
    RegularityEstimate est = estimate_regularity(g);
    s.max_run = est.max_run;
    s.c = est.c > 1.0 ? est.c : 2.0;
  }
  s.rounded.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    s.rounded[e] = static_cast<Step>(std::bit_floor(static_cast<uint64_t>(s.max_run[e])));
  return s;
}

}  // namespace

RegularityEstimate estimate_regularity(const TemporalGraph& g) {
  RegularityEstimate est;
  est.max_run.resize(g.edge_count());
  est.min_inner_run.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto runs = absence_runs(g.presence(e), g.lifetime());
    est.max_run[e] = std::max<Step>(1, runs.longest);
    est.min_inner_run[e] = runs.shortest_inner;
    if (runs.shortest_inner > 0)
      est.c = std::max(est.c, static_cast<double>(est.max_run[e]) /
                                  static_cast<double>(runs.shortest_inner));
  }
  return est;
}

RegularMstResult explore_regular_mst(const Instance& inst,
                                     const std::optional<RegularityProfile>& profile) {
  const TemporalGraph& g = inst.graph;
  RegularSetup setup = make_setup(g, profile);

  RegularMstResult res;
  res.rounded = setup.rounded;
  res.tree = kruskal_tree(g, setup.rounded);

  // Doubled Euler tour of the tree from the start vertex, children in
  // ascending vertex order.
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> tadj(g.n());
  for (EdgeId e : res.tree) {
    tadj[g.edge(e).u].emplace_back(g.edge(e).v, e);
    tadj[g.edge(e).v].emplace_back(g.edge(e).u, e);
  }
  for (auto& v : tadj) std::sort(v.begin(), v.end());

  std::vector<std::pair<Vertex, EdgeId>> tour;  // directed traversals (to, edge)
  {
    struct Frame {
      Vertex v;
      Vertex from;
      size_t i = 0;
    };
    std::vector<Frame> stack{{inst.start, -1, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.i < tadj[f.v].size()) {
        auto [w, e] = tadj[f.v][f.i++];
        if (w == f.from) continue;
        tour.emplace_back(w, e);
        stack.push_back({w, f.v, 0});
      } else {
        Vertex child = f.v;
        Vertex parent = f.from;
        stack.pop_back();
        if (parent >= 0) {
          EdgeId e = *g.find_edge(parent, child);
          tour.emplace_back(parent, e);
        }
      }
    }
  }

  TemporalWalk walk{inst.start, 0, {}};
  Time now = 0;
  for (auto& [to, e] : tour) {
    auto s = g.presence(e).next_present(now, g.lifetime());
    if (!s) throw LifetimeExhausted("regular exploration: tour edge never present again");
    Step wait = *s - now;
    if (wait > setup.max_run[e])
      throw std::logic_error("regular exploration waited past the edge's absence bound");
    res.max_wait = std::max(res.max_wait, wait);
    walk.moves.push_back(Move{*s, to});
    now = *s + 1;
  }
  res.walk = std::move(walk);
  return res;
}

ChargeAudit mst_weight_audit(const Instance& inst, const RegularityProfile& profile) {
  const TemporalGraph& g = inst.graph;
  RegularSetup setup = make_setup(g, profile);
  std::vector<EdgeId> tree = kruskal_tree(g, setup.rounded);

  ChargeAudit audit;
  audit.charge.assign(g.edge_count(), 0.0);
  audit.bound = 8.0 * setup.c;
  for (EdgeId e : tree) audit.tree_weight += setup.rounded[e];
  audit.tree_weight_bound = 8.0 * setup.c * g.edge_count();

  std::vector<Step> levels;
  for (EdgeId e : tree) levels.push_back(setup.rounded[e]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  for (Step level : levels) {
    UnionFind uf(g.n());
    for (EdgeId e : tree)
      if (setup.rounded[e] != level) uf.unite(g.edge(e).u, g.edge(e).v);
    // Every component charges c*level/J_e to each of its leaving edges; an
    // edge between two components is charged from both sides.
    std::vector<double> inv_sum(g.n(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      int ru = uf.find(g.edge(e).u), rv = uf.find(g.edge(e).v);
      if (ru == rv) continue;
      double per_side = setup.c * static_cast<double>(level) / static_cast<double>(setup.rounded[e]);
      audit.charge[e] += 2.0 * per_side;
      inv_sum[ru] += setup.c / static_cast<double>(setup.rounded[e]);
      inv_sum[rv] += setup.c / static_cast<double>(setup.rounded[e]);
    }
    // Each component's leaving edges must jointly cover every step, which
    // demands sum of c/J_e at least 1.
    std::vector<char> seen(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
      int r = uf.find(v);
      if (seen[r]) continue;
      seen[r] = 1;
      if (inv_sum[r] < 1.0 - 1e-9) ++audit.weak_components;
    }
  }
  for (double c : audit.charge) audit.max_charge = std::max(audit.max_charge, c);
  audit.ok = audit.max_charge <= audit.bound + 1e-9 &&
             static_cast<double>(audit.tree_weight) <= audit.tree_weight_bound + 1e-9 &&
             audit.weak_components == 0;
  return audit;
}

}  // namespace texplore
