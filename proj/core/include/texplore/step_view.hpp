#pragma once

#include <optional>
#include <span>
#include <vector>

#include "texplore/temporal_graph.hpp"
#include "texplore/walk.hpp"

namespace texplore {

// A window onto a temporal graph: a sorted subsequence of its steps plus an
// optional visible-vertex subset. View step i maps to base step at(i); edges
// with an invisible endpoint are absent in every view step. Algorithms run in
// view time and lift their walks back to base time.
class StepView {
 public:
  explicit StepView(const TemporalGraph& g);                       // identity view
  StepView(const TemporalGraph& g, std::vector<Step> base_steps);  // step subsequence

  // Suffix view: base steps [from, L].
  static StepView suffix(const TemporalGraph& g, Step from);

  // Child view over a subsequence of *this* view's steps (view indices).
  StepView restrict_steps(const std::vector<Step>& view_steps) const;
  StepView restrict_vertices(std::span<const Vertex> visible) const;

  const TemporalGraph& graph() const { return *g_; }
  Step size() const;             // number of view steps
  Step at(Step view_step) const; // base step for a view step

  bool vertex_visible(Vertex v) const { return vmask_.empty() || vmask_[v]; }
  bool edge_present(EdgeId e, Step view_step) const;
  std::optional<Step> next_present(EdgeId e, Step from_view_step) const;

  // Rewrites a view-time walk into base time.
  TemporalWalk lift(const TemporalWalk& w) const;

 private:
  const TemporalGraph* g_;
  std::optional<std::vector<Step>> steps_;  // nullopt: identity over [0, L]
  std::vector<char> vmask_;                 // empty: every vertex visible
};

}  // namespace texplore
