#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "texplore/presence.hpp"
#include "texplore/types.hpp"

namespace texplore {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  bool operator==(const Edge&) const = default;
};

struct ConnectivityReport {
  bool ok = true;
  Step first_failing_step = -1;
};

// A sequence of graphs over a fixed vertex set: the edge set at step t is
// determined by per-edge presence patterns. Immutable after construction and
// safe to share across threads.
class TemporalGraph {
 public:
  TemporalGraph() : TemporalGraph(1, {}, {}, 0) {}  // single-vertex placeholder
  TemporalGraph(int n, std::vector<Edge> edges, std::vector<PresencePattern> presence,
                Step lifetime);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  Step lifetime() const { return lifetime_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const PresencePattern& presence(EdgeId e) const { return presence_[e]; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  // Underlying adjacency: (neighbor, edge id) pairs, sorted by neighbor id.
  const std::vector<std::pair<Vertex, EdgeId>>& neighbors(Vertex v) const { return adj_[v]; }

  std::vector<int> underlying_degrees() const;

  bool edge_present(EdgeId e, Step t) const;  // throws std::out_of_range for t outside [0, L]
  std::vector<EdgeId> snapshot(Step t) const;

  // All steps in [0, L] where any edge toggles, plus step 0. Sorted, unique.
  std::vector<Step> change_points() const;

  // True iff every snapshot is connected on all n vertices. Connectivity is
  // recomputed only at change points; between them the edge set is constant.
  ConnectivityReport always_connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<PresencePattern> presence_;
  Step lifetime_;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
};

struct Instance {
  TemporalGraph graph;
  Vertex start = 0;
};

inline ConnectivityReport is_always_connected(const TemporalGraph& g) {
  return g.always_connected();
}

Instance make_instance(TemporalGraph g, Vertex start);

}  // namespace texplore
