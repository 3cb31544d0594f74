#include "texplore/temporal_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "texplore/union_find.hpp"

namespace texplore {

TemporalGraph::TemporalGraph(int n, std::vector<Edge> edges,
                             std::vector<PresencePattern> presence, Step lifetime)
    : n_(n), edges_(std::move(edges)), presence_(std::move(presence)), lifetime_(lifetime) {
  if (n_ < 1) throw ShapeError("graph needs at least one vertex");
  if (lifetime_ < 0) throw ShapeError("lifetime must be >= 0");
  if (edges_.size() != presence_.size())
    throw ShapeError("edge and presence counts differ");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw ShapeError("edge endpoint out of range");
    if (e.u == e.v) throw ShapeError("self-loops not allowed");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) throw ShapeError("duplicate edge");
    if (presence_[i].max_referenced_step() > lifetime_)
      throw ShapeError("presence pattern references a step past the lifetime");
  }
  adj_.assign(n_, {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    adj_[edges_[e].u].emplace_back(edges_[e].v, e);
    adj_[edges_[e].v].emplace_back(edges_[e].u, e);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<EdgeId> TemporalGraph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  for (auto& [w, e] : adj_[u])
    if (w == v) return e;
  return std::nullopt;
}

std::vector<int> TemporalGraph::underlying_degrees() const {
  std::vector<int> deg(n_, 0);
  for (auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool TemporalGraph::edge_present(EdgeId e, Step t) const {
  if (t < 0 || t > lifetime_)
    throw std::out_of_range("step " + std::to_string(t) + " outside [0, " +
                            std::to_string(lifetime_) + "]");
  return presence_[e].contains(t);
}

std::vector<EdgeId> TemporalGraph::snapshot(Step t) const {
  if (t < 0 || t > lifetime_)
    throw std::out_of_range("step " + std::to_string(t) + " outside [0, " +
                            std::to_string(lifetime_) + "]");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (presence_[e].contains(t)) out.push_back(e);
  return out;
}

std::vector<Step> TemporalGraph::change_points() const {
  std::vector<Step> pts{0};
  for (auto& p : presence_) p.append_toggles(lifetime_, pts);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

ConnectivityReport TemporalGraph::always_connected() const {
  for (Step cp : change_points()) {
    UnionFind uf(n_);
    for (EdgeId e = 0; e < edge_count(); ++e)
      if (presence_[e].contains(cp)) uf.unite(edges_[e].u, edges_[e].v);
    if (uf.components() != 1) return {false, cp};
  }
  return {true, -1};
}

Instance make_instance(TemporalGraph g, Vertex start) {
  if (start < 0 || start >= g.n()) throw ShapeError("start vertex out of range");
  return Instance{std::move(g), start};
}

}  // namespace texplore
