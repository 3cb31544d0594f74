#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "texplore/types.hpp"

namespace texplore {

enum class PresenceKind { Always, Steps, Intervals, Periodic };

// Per-edge presence over time, in one of four compressed forms:
//   Always                     present at every step
//   Steps                      explicit sorted step set
//   Intervals                  sorted disjoint [a,b] step ranges
//   Periodic(offset, p, q)     present at t iff (t - offset) mod (p+q) < p
// Membership is total for every step >= 0; the owning graph clamps queries
// to its lifetime.
class PresencePattern {
 public:
  static PresencePattern always();
  static PresencePattern at_steps(std::vector<Step> steps);
  static PresencePattern in_intervals(std::vector<std::pair<Step, Step>> ivals);
  static PresencePattern periodic(Step offset, Step present_len, Step absent_len);

  PresenceKind kind() const { return kind_; }
  bool contains(Step t) const;

  // Smallest present step in [t, limit], if any.
  std::optional<Step> next_present(Step t, Step limit) const;

  // Appends every step u in [1, limit] where contains(u) != contains(u-1).
  void append_toggles(Step limit, std::vector<Step>& out) const;

  // Maximal present runs intersected with [0, limit], in order.
  std::vector<std::pair<Step, Step>> present_runs(Step limit) const;

  // Largest referenced step for Steps/Intervals kinds (-1 when empty or
  // unbounded kinds); used to validate patterns against a lifetime.
  Step max_referenced_step() const;

  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<std::pair<Step, Step>>& intervals() const { return intervals_; }
  Step periodic_offset() const { return offset_; }
  Step periodic_present() const { return present_len_; }
  Step periodic_absent() const { return absent_len_; }

  bool operator==(const PresencePattern&) const = default;

 private:
  PresencePattern() = default;

  PresenceKind kind_ = PresenceKind::Always;
  std::vector<Step> steps_;
  std::vector<std::pair<Step, Step>> intervals_;
  Step offset_ = 0;
  Step present_len_ = 0;
  Step absent_len_ = 0;
};

// Union of two patterns over [0, limit], normalized to intervals.
PresencePattern presence_union(const PresencePattern& a, const PresencePattern& b, Step limit);

// Collapses an explicit step list to a Periodic pattern when the steps form
// an arithmetic progression that covers [first, limit] without a truncated
// tail; otherwise returns a Steps pattern.
PresencePattern compress_steps(std::vector<Step> steps, Step limit);

}  // namespace texplore
