#pragma once

#include <vector>

#include "texplore/generators.hpp"
#include "texplore/rng.hpp"
#include "texplore/temporal_graph.hpp"

namespace texplore::testing {

// Always-present realization of a static edge list.
inline Instance static_instance(int n, std::vector<Edge> edges, Step lifetime, Vertex start = 0) {
  std::vector<PresencePattern> presence(edges.size(), PresencePattern::always());
  return make_instance(TemporalGraph(n, std::move(edges), std::move(presence), lifetime), start);
}

// Small connected underlying graph drawn from a fixed menu, for seeded
// corpora of tiny instances.
inline std::vector<Edge> tiny_underlying(int n, uint64_t seed) {
  Rng rng(seed);
  switch (rng.uniform(0, 3)) {
    case 0:
      return n >= 3 ? cycle_graph(n) : path_graph(n);
    case 1:
      return path_graph(n);
    case 2:
      return star_graph(n);
    default: {
      // random spanning tree plus a few extra edges
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i)
        edges.push_back({i, static_cast<Vertex>(rng.uniform(0, i - 1))});
      int extra = static_cast<int>(rng.uniform(0, n / 2));
      for (int k = 0; k < extra; ++k) {
        Vertex a = static_cast<Vertex>(rng.uniform(0, n - 1));
        Vertex b = static_cast<Vertex>(rng.uniform(0, n - 1));
        if (a == b) continue;
        bool dup = false;
        for (auto& e : edges)
          dup |= (e.u == std::min(a, b) && e.v == std::max(a, b)) ||
                 (e.u == std::max(a, b) && e.v == std::min(a, b));
        if (!dup) edges.push_back({std::min(a, b), std::max(a, b)});
      }
      return edges;
    }
  }
}

}  // namespace texplore::testing
