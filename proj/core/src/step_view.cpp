#include "texplore/step_view.hpp"

#include <algorithm>

namespace texplore {

StepView::StepView(const TemporalGraph& g) : g_(&g) {}

StepView::StepView(const TemporalGraph& g, std::vector<Step> base_steps)
    : g_(&g), steps_(std::move(base_steps)) {
  for (size_t i = 0; i < steps_->size(); ++i) {
    Step s = (*steps_)[i];
    if (s < 0 || s > g.lifetime()) throw ShapeError("view step outside lifetime");
    if (i > 0 && s <= (*steps_)[i - 1]) throw ShapeError("view steps must increase");
  }
}

StepView StepView::suffix(const TemporalGraph& g, Step from) {
  if (from < 0 || from > g.lifetime() + 1) throw ShapeError("suffix start outside lifetime");
  std::vector<Step> steps;
  steps.reserve(static_cast<size_t>(g.lifetime() + 1 - from));
  for (Step t = from; t <= g.lifetime(); ++t) steps.push_back(t);
  return StepView(g, std::move(steps));
}

StepView StepView::restrict_steps(const std::vector<Step>& view_steps) const {
  std::vector<Step> base;
  base.reserve(view_steps.size());
  for (Step i : view_steps) base.push_back(at(i));
  StepView out(*g_, std::move(base));
  out.vmask_ = vmask_;
  return out;
}

StepView StepView::restrict_vertices(std::span<const Vertex> visible) const {
  StepView out = *this;
  out.vmask_.assign(g_->n(), 0);
  for (Vertex v : visible) {
    if (v < 0 || v >= g_->n()) throw ShapeError("visible vertex out of range");
    if (vertex_visible(v)) out.vmask_[v] = 1;
  }
  return out;
}

Step StepView::size() const {
  return steps_ ? static_cast<Step>(steps_->size()) : g_->lifetime() + 1;
}

Step StepView::at(Step view_step) const {
  if (view_step < 0 || view_step >= size()) throw std::out_of_range("view step out of range");
  return steps_ ? (*steps_)[static_cast<size_t>(view_step)] : view_step;
}

bool StepView::edge_present(EdgeId e, Step view_step) const {
  const Edge& ed = g_->edge(e);
  if (!vertex_visible(ed.u) || !vertex_visible(ed.v)) return false;
  return g_->presence(e).contains(at(view_step));
}

std::optional<Step> StepView::next_present(EdgeId e, Step from_view_step) const {
  const Edge& ed = g_->edge(e);
  if (!vertex_visible(ed.u) || !vertex_visible(ed.v)) return std::nullopt;
  if (from_view_step < 0) from_view_step = 0;
  if (from_view_step >= size()) return std::nullopt;
  const PresencePattern& pat = g_->presence(e);
  if (!steps_) return pat.next_present(from_view_step, g_->lifetime());
  const auto& seq = *steps_;
  size_t i = static_cast<size_t>(from_view_step);
  while (i < seq.size()) {
    auto b = pat.next_present(seq[i], g_->lifetime());
    if (!b) return std::nullopt;
    auto it = std::lower_bound(seq.begin() + static_cast<long>(i), seq.end(), *b);
    if (it == seq.end()) return std::nullopt;
    size_t j = static_cast<size_t>(it - seq.begin());
    if (seq[j] == *b) return static_cast<Step>(j);
    i = j;  // seq skipped past the present run; retry from the next view step
  }
  return std::nullopt;
}

TemporalWalk StepView::lift(const TemporalWalk& w) const {
  TemporalWalk out;
  out.start = w.start;
  out.start_time = w.start_time >= size() ? (size() ? at(size() - 1) + 1 : 0) : at(w.start_time);
  out.moves.reserve(w.moves.size());
  for (const Move& m : w.moves) out.moves.push_back(Move{at(m.step), m.to});
  return out;
}

}  // namespace texplore
