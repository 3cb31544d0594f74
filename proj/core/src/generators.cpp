#include "texplore/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "texplore/earliest_arrival.hpp"
#include "texplore/rng.hpp"
#include "texplore/union_find.hpp"

namespace texplore {

// ---------------------------------------------------------------------------
// Static underlying graphs
// ---------------------------------------------------------------------------

std::vector<Edge> cycle_graph(int n) {
  if (n < 3) throw ShapeError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return e;
}

std::vector<Edge> path_graph(int n) {
  if (n < 1) throw ShapeError("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

std::vector<Edge> star_graph(int n) {
  if (n < 2) throw ShapeError("star needs n >= 2");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return e;
}

std::vector<Edge> complete_graph(int n) {
  if (n < 2) throw ShapeError("complete graph needs n >= 2");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return e;
}

std::vector<Edge> grid_2xn(int cols) {
  if (cols < 1) throw ShapeError("grid needs >= 1 column");
  auto id = [](int r, int c) { return 2 * c + r; };
  std::vector<Edge> e;
  for (int c = 0; c < cols; ++c) e.push_back({id(0, c), id(1, c)});
  for (int c = 0; c + 1 < cols; ++c) {
    e.push_back({id(0, c), id(0, c + 1)});
    e.push_back({id(1, c), id(1, c + 1)});
  }
  return e;
}

std::vector<Edge> cycle_with_chord(int n, Vertex a, Vertex b) {
  if (n < 4) throw ShapeError("chorded cycle needs n >= 4");
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw ShapeError("bad chord endpoints");
  int dist = std::abs(a - b);
  if (dist == 1 || dist == n - 1) throw ShapeError("chord endpoints adjacent on the cycle");
  auto e = cycle_graph(n);
  e.push_back({std::min(a, b), std::max(a, b)});
  return e;
}

// ---------------------------------------------------------------------------
// Series-parallel graphs with width-2 decompositions
// ---------------------------------------------------------------------------

namespace {

struct SpBuilder {
  Rng rng;
  std::vector<Edge> edges;
  TreeDecomposition td;
  int next_vertex = 2;

  explicit SpBuilder(uint64_t seed) : rng(seed) {}

  int add_bag(std::vector<Vertex> bag) {
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    return static_cast<int>(td.bags.size()) - 1;
  }

  // Builds an s-t component allowed to create `budget` new vertices; returns
  // the decomposition node whose bag contains {s, t}.
  int build(Vertex s, Vertex t, int budget) {
    if (budget <= 0) {
      edges.push_back({s, t});
      return add_bag({s, t});
    }
    bool parallel = budget >= 2 && rng.chance(0.4);
    if (parallel) {
      int b1 = static_cast<int>(rng.uniform(1, budget - 1));
      int left = build(s, t, b1);
      int right = build(s, t, budget - b1);
      int root = add_bag({s, t});
      td.tree.emplace_back(root, left);
      td.tree.emplace_back(root, right);
      return root;
    }
    Vertex w = next_vertex++;
    int b1 = static_cast<int>(rng.uniform(0, budget - 1));
    int left = build(s, w, b1);
    int right = build(w, t, budget - 1 - b1);
    int root = add_bag({s, w, t});
    td.tree.emplace_back(root, left);
    td.tree.emplace_back(root, right);
    return root;
  }
};

}  // namespace

SpGraph series_parallel_graph(int target_n, uint64_t seed) {
  if (target_n < 2) throw ShapeError("series-parallel graph needs n >= 2");
  SpBuilder b(seed);
  b.build(0, 1, target_n - 2);
  SpGraph out;
  out.n = b.next_vertex;
  out.edges = std::move(b.edges);
  out.td = std::move(b.td);
  return out;
}

// ---------------------------------------------------------------------------
// Rotating stars
// ---------------------------------------------------------------------------

namespace {

// Presence of the star edge {c_j, x}: present at step i iff the current
// center c_{i mod n} is an endpoint. Center-center pairs with cyclically
// adjacent indices collapse to one periodic run; other pairs need explicit
// steps.
PresencePattern center_leaf_pattern(int j, int n) {
  return PresencePattern::periodic(j, 1, n - 1);
}

PresencePattern center_center_pattern(int j, int k, int n, Step lifetime) {
  if (n == 2) return PresencePattern::periodic(0, 2, 0);
  if (k == j + 1) return PresencePattern::periodic(j, 2, n - 2);
  if (j == 0 && k == n - 1) return PresencePattern::periodic(n - 1, 2, n - 2);
  std::vector<Step> steps;
  for (Step base = 0; base <= lifetime; base += n) {
    if (base + j <= lifetime) steps.push_back(base + j);
    if (base + k <= lifetime) steps.push_back(base + k);
  }
  return PresencePattern::at_steps(std::move(steps));
}

void add_star_block(std::vector<Edge>& edges, std::vector<PresencePattern>& presence,
                    const std::vector<Vertex>& centers, const std::vector<Vertex>& leaves,
                    Step lifetime) {
  const int n = static_cast<int>(centers.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      edges.push_back({centers[j], leaves[i]});
      presence.push_back(center_leaf_pattern(j, n));
    }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      edges.push_back({centers[j], centers[k]});
      presence.push_back(center_center_pattern(j, k, n, lifetime));
    }
}

}  // namespace

Instance rotating_star(int n, Step lifetime) {
  if (n < 2) throw ShapeError("rotating_star needs n >= 2");
  Step L = std::max<Step>(4LL * n * n, lifetime);
  std::vector<Vertex> centers, leaves;
  for (int j = 0; j < n; ++j) centers.push_back(j);
  for (int i = 0; i < n; ++i) leaves.push_back(n + i);
  std::vector<Edge> edges;
  std::vector<PresencePattern> presence;
  add_star_block(edges, presence, centers, leaves, L);
  return make_instance(TemporalGraph(2 * n, std::move(edges), std::move(presence), L), 0);
}

Instance chained_stars(int d, int n, Step lifetime) {
  if (d < 4 || d % 2 != 0) throw ShapeError("chained_stars needs even d >= 4");
  if (n % d != 0 || n < d) throw ShapeError("chained_stars needs n a positive multiple of d");
  const int m = d / 2;
  const int copies = n / d;
  const int nv = n - (copies - 1);
  Step L = std::max<Step>(static_cast<Step>(nv) * nv, lifetime);

  std::vector<Edge> edges;
  std::vector<PresencePattern> presence;
  int next_id = 0;
  Vertex shared_leaf = -1;  // leaf 1 of the previous block
  for (int b = 0; b < copies; ++b) {
    std::vector<Vertex> centers(m), leaves(m);
    for (int j = 0; j < m; ++j) centers[j] = next_id++;
    for (int i = 0; i < m; ++i) {
      if (i == 0 && b > 0)
        leaves[i] = shared_leaf;
      else
        leaves[i] = next_id++;
    }
    add_star_block(edges, presence, centers, leaves, L);
    shared_leaf = leaves[std::min(1, m - 1)];
  }
  if (next_id != nv) throw std::logic_error("chained_stars vertex count mismatch");
  return make_instance(TemporalGraph(nv, std::move(edges), std::move(presence), L), 0);
}

// ---------------------------------------------------------------------------
// Planar path-per-step family
// ---------------------------------------------------------------------------

Instance planar_rounds(int n, Step lifetime) {
  if (n < 8 || (n & (n - 1)) != 0) throw ShapeError("planar_rounds needs n a power of two, >= 8");
  const int q = n / 4;
  const int logn = static_cast<int>(std::round(std::log2(static_cast<double>(n))));
  Step L = std::max<Step>(static_cast<Step>(n) * n, lifetime);
  auto tv = [&](int i) { return i; };
  auto bv = [&](int i) { return q + i; };
  auto pv = [&](int j) { return 2 * q + j; };

  std::vector<Edge> edges;
  std::vector<PresencePattern> presence;
  auto add = [&](Vertex a, Vertex b, PresencePattern p) {
    edges.push_back({a, b});
    presence.push_back(std::move(p));
  };

  // Path joining t_0 and b_0, always present.
  add(tv(0), pv(0), PresencePattern::always());
  for (int j = 0; j + 1 < n / 2; ++j) add(pv(j), pv(j + 1), PresencePattern::always());
  add(pv(n / 2 - 1), bv(0), PresencePattern::always());

  // Column i's horizontal edges persist until its replacement round starts;
  // its cross edges take over from then on.
  for (int i = 1; i <= q - 1; ++i) {
    int v2 = std::countr_zero(static_cast<unsigned>(i));
    int round = logn - v2 - 2;
    Step sw = static_cast<Step>(round) * (n / 2);
    auto horiz = PresencePattern::in_intervals({{0, sw - 1}});
    auto cross = PresencePattern::in_intervals({{sw, L}});
    add(tv(i - 1), tv(i), horiz);
    add(bv(i - 1), bv(i), horiz);
    add(tv(i - 1), bv(i), cross);
    add(bv(i - 1), tv(i), cross);
  }
  return make_instance(TemporalGraph(n, std::move(edges), std::move(presence), L), tv(0));
}

// ---------------------------------------------------------------------------
// Cycle requiring 2n-3 steps
// ---------------------------------------------------------------------------

Instance cycle_2n3(int n, Step lifetime) {
  if (n < 4) throw ShapeError("cycle_2n3 needs n >= 4");
  Step L = std::max<Step>(static_cast<Step>(n) * n, lifetime);
  std::vector<Edge> edges = cycle_graph(n);
  std::vector<PresencePattern> presence;
  for (auto& e : edges) {
    if (e == Edge{0, 1})
      presence.push_back(PresencePattern::in_intervals({{n - 2, L}}));
    else if (e == Edge{1, 2})
      presence.push_back(PresencePattern::in_intervals({{0, n - 3}}));
    else
      presence.push_back(PresencePattern::always());
  }
  return make_instance(TemporalGraph(n, std::move(edges), std::move(presence), L), 0);
}

// ---------------------------------------------------------------------------
// Hardness gadget
// ---------------------------------------------------------------------------

GadgetResult hardness_gadget(const GadgetSpec& spec,
                             const std::optional<std::vector<Vertex>>& ham_path,
                             Step lifetime) {
  const int np = spec.n_prime;
  if (np < 2) throw ShapeError("gadget base graph needs n' >= 2");
  if (spec.c < 1) throw ShapeError("gadget exponent must be >= 1");
  if (spec.s < 0 || spec.s >= np || spec.t < 0 || spec.t >= np || spec.s == spec.t)
    throw ShapeError("gadget terminals out of range");
  {
    UnionFind uf(np);
    for (auto& e : spec.base_edges) {
      if (e.u < 0 || e.u >= np || e.v < 0 || e.v >= np || e.u == e.v)
        throw ShapeError("gadget base edge out of range");
      uf.unite(e.u, e.v);
    }
    if (uf.components() != 1) throw ShapeError("gadget base graph must be connected");
  }

  long long centers = 1;
  for (int i = 0; i < spec.c; ++i) centers *= np;
  if (centers > 4096) throw ShapeError("gadget too large: n'^c centers > 4096");
  const int n = static_cast<int>(centers);
  const long long total = centers * (1 + np);
  Step L = std::max<Step>(total * total, lifetime);

  auto copy_vertex = [&](int copy, Vertex base) -> Vertex {
    return n + copy * np + base;
  };

  std::vector<Edge> edges;
  std::vector<PresencePattern> presence;
  auto add = [&](Vertex a, Vertex b, PresencePattern p) {
    edges.push_back({a, b});
    presence.push_back(std::move(p));
  };

  // Star skeleton over centers and each copy's entry vertex.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) add(j, copy_vertex(i, spec.s), center_leaf_pattern(j, n));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) add(j, k, center_center_pattern(j, k, n, L));

  // Copies of the base graph, always present.
  for (int i = 0; i < n; ++i)
    for (auto& e : spec.base_edges)
      add(copy_vertex(i, e.u), copy_vertex(i, e.v), PresencePattern::always());

  // Quick links: copy i's exit to copy i+1's entry, present only at step i*n'.
  std::vector<EdgeId> quick;
  for (int i = 1; i < n - 1; ++i) {
    quick.push_back(static_cast<EdgeId>(edges.size()));
    add(copy_vertex(i, spec.t), copy_vertex(i + 1, spec.s),
        PresencePattern::at_steps({static_cast<Step>(i) * np}));
  }

  GadgetResult res;
  res.centers = n;
  res.total_vertices = total;
  res.quick_links = std::move(quick);
  res.instance = make_instance(
      TemporalGraph(static_cast<int>(total), std::move(edges), std::move(presence), L), 0);

  if (ham_path) {
    const auto& hp = *ham_path;
    if (static_cast<int>(hp.size()) != np || hp.front() != spec.s || hp.back() != spec.t)
      throw ShapeError("witness path must be a Hamiltonian s-t ordering of the base graph");
    std::set<Vertex> seen(hp.begin(), hp.end());
    if (static_cast<int>(seen.size()) != np)
      throw ShapeError("witness path repeats a vertex");
    std::set<std::pair<Vertex, Vertex>> base_set;
    for (auto& e : spec.base_edges) base_set.insert(std::minmax(e.u, e.v));
    for (size_t i = 0; i + 1 < hp.size(); ++i)
      if (!base_set.count(std::minmax(hp[i], hp[i + 1])))
        throw ShapeError("witness path uses a non-edge of the base graph");

    const TemporalGraph& g = res.instance.graph;
    TemporalWalk w;
    w.start = 0;
    std::vector<char> visited(g.n(), 0);
    visited[0] = 1;
    // Scripted leg: ride the base-graph copies via the quick links.
    for (int i = 1; i < n; ++i) {
      Step base = static_cast<Step>(i - 1) * np;
      w.moves.push_back(Move{base, copy_vertex(i, spec.s)});
      for (int j = 1; j < np; ++j) w.moves.push_back(Move{base + j, copy_vertex(i, hp[j])});
    }
    for (const Move& m : w.moves) visited[m.to] = 1;
    // Greedy completion: nearest unvisited by earliest arrival, lowest id first.
    while (true) {
      Vertex cur = w.end();
      Time now = w.end_time();
      ReachResult ea = earliest_arrival(g, cur, now);
      Vertex best = -1;
      for (Vertex v = 0; v < g.n(); ++v)
        if (!visited[v] && ea.reachable(v) && (best == -1 || ea.time[v] < ea.time[best]))
          best = v;
      if (best == -1) {
        bool missing = false;
        for (Vertex v = 0; v < g.n(); ++v) missing |= !visited[v];
        if (missing) throw LifetimeExhausted("gadget witness: unvisited vertex unreachable");
        break;
      }
      TemporalWalk seg = ea.walk_to(best);
      for (const Move& m : seg.moves) visited[m.to] = 1;
      w.append(seg);
    }
    res.witness = MultiAgentSchedule{{std::move(w)}};
  }
  return res;
}

// ---------------------------------------------------------------------------
// Random always-connected realizations
// ---------------------------------------------------------------------------

Instance random_realization(int n, const std::vector<Edge>& underlying, Step lifetime,
                            double density, uint64_t seed, Step period, Vertex start) {
  if (lifetime < 0) throw ShapeError("random_realization needs an explicit lifetime");
  if (density < 0.0 || density > 1.0) throw ShapeError("density must be in [0,1]");
  if (period < 1) throw ShapeError("period must be >= 1");
  {
    UnionFind uf(n);
    for (auto& e : underlying) uf.unite(e.u, e.v);
    if (uf.components() != 1) throw ShapeError("underlying graph must be connected");
  }
  const int m = static_cast<int>(underlying.size());
  Rng rng(seed);
  std::vector<std::vector<std::pair<Step, Step>>> runs(m);
  std::vector<EdgeId> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::vector<char> present(m);

  for (Step block = 0; block <= lifetime; block += period) {
    Step hi = std::min(block + period - 1, lifetime);
    rng.shuffle(order);
    UnionFind uf(n);
    std::fill(present.begin(), present.end(), 0);
    for (EdgeId e : order)
      if (uf.unite(underlying[e].u, underlying[e].v)) present[e] = 1;
    for (EdgeId e = 0; e < m; ++e)
      if (!present[e] && rng.chance(density)) present[e] = 1;
    for (EdgeId e = 0; e < m; ++e) {
      if (!present[e]) continue;
      if (!runs[e].empty() && runs[e].back().second + 1 == block)
        runs[e].back().second = hi;
      else
        runs[e].emplace_back(block, hi);
    }
  }

  std::vector<PresencePattern> presence;
  presence.reserve(m);
  for (EdgeId e = 0; e < m; ++e) {
    if (runs[e].size() == 1 && runs[e][0] == std::pair<Step, Step>(0, lifetime))
      presence.push_back(PresencePattern::always());
    else if (runs[e].empty())
      presence.push_back(PresencePattern::at_steps({}));
    else
      presence.push_back(PresencePattern::in_intervals(std::move(runs[e])));
  }
  return make_instance(TemporalGraph(n, underlying, std::move(presence), lifetime), start);
}

// ---------------------------------------------------------------------------
// Regularly present edges
// ---------------------------------------------------------------------------

namespace {

// Streaming fire recorder: keeps an arithmetic progression while it lasts,
// falls back to an explicit list on the first irregular fire.
struct FireRecorder {
  Step first = -1;
  Step last = -1;
  Step stride = 0;
  long long count = 0;
  bool regular = true;
  std::vector<Step> raw;

  void add(Step t) {
    if (count == 0) {
      first = t;
    } else if (count == 1) {
      stride = t - first;
    } else if (regular && t - last != stride) {
      raw.reserve(static_cast<size_t>(count) + 8);
      for (Step s = first; s <= last; s += stride) raw.push_back(s);
      regular = false;
    }
    if (!regular) raw.push_back(t);
    last = t;
    ++count;
  }

  PresencePattern finish(Step limit) {
    if (count == 0) return PresencePattern::at_steps({});
    if (regular) {
      if (count >= 3 && stride >= 2 && last + stride > limit && first < stride)
        return PresencePattern::periodic(first, 1, stride - 1);
      std::vector<Step> steps;
      steps.reserve(static_cast<size_t>(count));
      if (count == 1)
        steps.push_back(first);
      else
        for (Step s = first; s <= last; s += stride) steps.push_back(s);
      return PresencePattern::at_steps(std::move(steps));
    }
    return PresencePattern::at_steps(std::move(raw));
  }
};

}  // namespace

Instance regular_instance(int n, const std::vector<Edge>& underlying,
                          const RegularityProfile& profile, uint64_t seed, Step lifetime,
                          int max_retries) {
  const int m = static_cast<int>(underlying.size());
  if (m > 3 * n) throw ShapeError("regular_instance enforces |E| <= 3n");
  if (static_cast<int>(profile.max_run.size()) != m)
    throw ShapeError("profile size does not match edge count");
  if (profile.c <= 1.0) throw ShapeError("profile constant c must be > 1");
  {
    UnionFind uf(n);
    for (auto& e : underlying) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw ShapeError("edge out of range");
      uf.unite(e.u, e.v);
    }
    if (uf.components() != 1) throw ShapeError("underlying graph must be connected");
  }

  std::vector<Step> lo(m), hi(m);
  Step max_i = 1;
  for (EdgeId e = 0; e < m; ++e) {
    hi[e] = profile.max_run[e];
    if (hi[e] < 1) throw ShapeError("profile runs must be >= 1");
    lo[e] = std::max<Step>(1, static_cast<Step>(std::ceil(
                                  static_cast<double>(hi[e]) / profile.c - 1e-12)));
    max_i = std::max(max_i, hi[e]);
  }
  const Step L = lifetime >= 0 ? lifetime : std::max<Step>(256, 4LL * n * (max_i + 1));

  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    Rng rng(seed + static_cast<uint64_t>(attempt) * 0x9e3779b9ULL);

    // Initial firing offsets. Edges with a run window of exactly one step can
    // never be pulled in for connectivity, so seed two edge-disjoint spanning
    // forests of them on alternating parities; everything else starts at a
    // random offset within its first window.
    std::vector<Step> next(m, -1);
    {
      std::vector<EdgeId> tight;
      for (EdgeId e = 0; e < m; ++e)
        if (lo[e] == 1 && hi[e] == 1) tight.push_back(e);
      if (attempt > 0) rng.shuffle(tight);
      UnionFind even(n), odd(n);
      for (EdgeId e : tight) {
        if (even.unite(underlying[e].u, underlying[e].v))
          next[e] = 0;
        else if (odd.unite(underlying[e].u, underlying[e].v))
          next[e] = 1;
      }
      for (EdgeId e = 0; e < m; ++e)
        if (next[e] < 0) next[e] = rng.uniform(0, hi[e]);
    }

    std::vector<std::vector<EdgeId>> bucket(static_cast<size_t>(L) + 1);
    for (EdgeId e = 0; e < m; ++e)
      if (next[e] <= L) bucket[static_cast<size_t>(next[e])].push_back(e);

    std::vector<Step> last_fire(m, -1);
    std::vector<FireRecorder> rec(m);
    std::vector<EdgeId> present;
    bool failed = false;

    for (Step t = 0; t <= L && !failed; ++t) {
      present.clear();
      for (EdgeId e : bucket[static_cast<size_t>(t)])
        if (next[e] == t) present.push_back(e);

      UnionFind uf(n);
      for (EdgeId e : present) uf.unite(underlying[e].u, underlying[e].v);
      while (uf.components() != 1) {
        EdgeId pick = -1;
        for (EdgeId e = 0; e < m; ++e) {
          if (next[e] == t) continue;  // already present
          bool available = last_fire[e] < 0 || t >= last_fire[e] + lo[e] + 1;
          if (!available) continue;
          if (uf.connected(underlying[e].u, underlying[e].v)) continue;
          pick = e;
          break;
        }
        if (pick < 0) {
          failed = true;
          break;
        }
        present.push_back(pick);
        uf.unite(underlying[pick].u, underlying[pick].v);
        next[pick] = t;  // pulled in; rescheduled below
      }
      if (failed) break;

      for (EdgeId e : present) {
        rec[e].add(t);
        last_fire[e] = t;
        Step gap = rng.uniform(lo[e], hi[e]);
        next[e] = t + 1 + gap;
        if (next[e] <= L) bucket[static_cast<size_t>(next[e])].push_back(e);
      }
    }
    if (failed) continue;

    std::vector<PresencePattern> presence;
    presence.reserve(m);
    for (EdgeId e = 0; e < m; ++e) presence.push_back(rec[e].finish(L));
    return make_instance(TemporalGraph(n, underlying, std::move(presence), L), 0);
  }
  throw ShapeError("regular_instance: no connected schedule after " +
                   std::to_string(max_retries + 1) + " attempts (seed " +
                   std::to_string(seed) + ")");
}

RegularFamily regular_family_graph(int n, uint64_t seed) {
  if (n < 4) throw ShapeError("regular family needs n >= 4");
  Rng rng(seed);
  std::set<std::pair<Vertex, Vertex>> used;
  RegularFamily fam;

  auto add_edge = [&](Vertex a, Vertex b, Step max_run) {
    auto key = std::minmax(a, b);
    if (!used.insert(key).second) return false;
    fam.edges.push_back({key.first, key.second});
    fam.profile.max_run.push_back(max_run);
    return true;
  };

  // Two edge-disjoint random spanning trees; their edges alternate parities
  // (absence runs of exactly one step), so every snapshot holds a full tree.
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  for (int i = 1; i < n; ++i) add_edge(perm[i], perm[rng.uniform(0, i - 1)], 1);
  {
    // Second tree by shuffled Kruskal over the unused pairs; the complement
    // of a tree on n >= 4 vertices is connected.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!used.count({u, v})) pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    UnionFind uf(n);
    for (auto& [u, v] : pairs) {
      if (uf.components() == 1) break;
      if (uf.unite(u, v)) add_edge(u, v, 1);
    }
    if (uf.components() != 1) throw ShapeError("regular family: cannot build disjoint trees");
  }

  // Long-gap extras; they play no connectivity role.
  int extras = n / 2;
  for (int k = 0; k < extras; ++k) {
    for (int tries = 0; tries < 32; ++tries) {
      Vertex a = static_cast<Vertex>(rng.uniform(0, n - 1));
      Vertex b = static_cast<Vertex>(rng.uniform(0, n - 1));
      if (a == b) continue;
      if (add_edge(a, b, rng.chance(0.5) ? 4 : 8)) break;
    }
  }
  fam.profile.c = 2.0;
  return fam;
}

}  // namespace texplore
