#include "texplore/presence.hpp"

#include <algorithm>

namespace texplore {

namespace {
Step floor_mod(Step a, Step m) {
  Step r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

PresencePattern PresencePattern::always() {
  PresencePattern p;
  p.kind_ = PresenceKind::Always;
  return p;
}

PresencePattern PresencePattern::at_steps(std::vector<Step> steps) {
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  if (!steps.empty() && steps.front() < 0) throw ShapeError("presence steps must be >= 0");
  PresencePattern p;
  p.kind_ = PresenceKind::Steps;
  p.steps_ = std::move(steps);
  return p;
}

PresencePattern PresencePattern::in_intervals(std::vector<std::pair<Step, Step>> ivals) {
  std::sort(ivals.begin(), ivals.end());
  for (size_t i = 0; i < ivals.size(); ++i) {
    if (ivals[i].first < 0 || ivals[i].second < ivals[i].first)
      throw ShapeError("presence interval malformed");
    if (i > 0 && ivals[i].first <= ivals[i - 1].second)
      throw ShapeError("presence intervals must be disjoint");
  }
  PresencePattern p;
  p.kind_ = PresenceKind::Intervals;
  p.intervals_ = std::move(ivals);
  return p;
}

PresencePattern PresencePattern::periodic(Step offset, Step present_len, Step absent_len) {
  if (present_len < 1 || absent_len < 0 || offset < 0)
    throw ShapeError("periodic presence needs present >= 1, absent >= 0, offset >= 0");
  PresencePattern p;
  p.kind_ = PresenceKind::Periodic;
  p.offset_ = offset;
  p.present_len_ = present_len;
  p.absent_len_ = absent_len;
  return p;
}

bool PresencePattern::contains(Step t) const {
  switch (kind_) {
    case PresenceKind::Always:
      return true;
    case PresenceKind::Steps:
      return std::binary_search(steps_.begin(), steps_.end(), t);
    case PresenceKind::Intervals: {
      auto it = std::upper_bound(intervals_.begin(), intervals_.end(),
                                 std::make_pair(t, std::numeric_limits<Step>::max()));
      if (it == intervals_.begin()) return false;
      --it;
      return t >= it->first && t <= it->second;
    }
    case PresenceKind::Periodic:
      return floor_mod(t - offset_, present_len_ + absent_len_) < present_len_;
  }
  return false;
}

std::optional<Step> PresencePattern::next_present(Step t, Step limit) const {
  if (t < 0) t = 0;
  if (t > limit) return std::nullopt;
  switch (kind_) {
    case PresenceKind::Always:
      return t;
    case PresenceKind::Steps: {
      auto it = std::lower_bound(steps_.begin(), steps_.end(), t);
      if (it == steps_.end() || *it > limit) return std::nullopt;
      return *it;
    }
    case PresenceKind::Intervals: {
      auto it = std::upper_bound(intervals_.begin(), intervals_.end(),
                                 std::make_pair(t, std::numeric_limits<Step>::max()));
      if (it != intervals_.begin() && t <= std::prev(it)->second) return t;
      if (it == intervals_.end() || it->first > limit) return std::nullopt;
      return it->first;
    }
    case PresenceKind::Periodic: {
      Step period = present_len_ + absent_len_;
      Step r = floor_mod(t - offset_, period);
      Step s = r < present_len_ ? t : t + (period - r);
      if (s > limit) return std::nullopt;
      return s;
    }
  }
  return std::nullopt;
}

void PresencePattern::append_toggles(Step limit, std::vector<Step>& out) const {
  auto runs = present_runs(limit);
  for (auto& [a, b] : runs) {
    if (a >= 1 && a <= limit) out.push_back(a);
    if (b + 1 <= limit) out.push_back(b + 1);
  }
}

std::vector<std::pair<Step, Step>> PresencePattern::present_runs(Step limit) const {
  std::vector<std::pair<Step, Step>> runs;
  switch (kind_) {
    case PresenceKind::Always:
      runs.emplace_back(0, limit);
      break;
    case PresenceKind::Steps: {
      for (Step s : steps_) {
        if (s > limit) break;
        if (!runs.empty() && runs.back().second + 1 == s)
          runs.back().second = s;
        else
          runs.emplace_back(s, s);
      }
      break;
    }
    case PresenceKind::Intervals: {
      for (auto& [a, b] : intervals_) {
        if (a > limit) break;
        Step hi = std::min(b, limit);
        if (!runs.empty() && runs.back().second + 1 == a)
          runs.back().second = hi;
        else
          runs.emplace_back(a, hi);
      }
      break;
    }
    case PresenceKind::Periodic: {
      Step period = present_len_ + absent_len_;
      auto floor_div = [](Step a, Step m) { return a >= 0 ? a / m : -((-a + m - 1) / m); };
      // First run whose end may reach step 0.
      Step k = floor_div(0 - offset_ - (present_len_ - 1), period);
      for (Step start = offset_ + k * period; start <= limit; start += period) {
        Step a = std::max<Step>(start, 0);
        Step b = std::min(start + present_len_ - 1, limit);
        if (a > b) continue;
        if (!runs.empty() && runs.back().second + 1 >= a)
          runs.back().second = std::max(runs.back().second, b);
        else
          runs.emplace_back(a, b);
      }
      break;
    }
  }
  return runs;
}

Step PresencePattern::max_referenced_step() const {
  switch (kind_) {
    case PresenceKind::Steps:
      return steps_.empty() ? -1 : steps_.back();
    case PresenceKind::Intervals:
      return intervals_.empty() ? -1 : intervals_.back().second;
    default:
      return -1;
  }
}

PresencePattern presence_union(const PresencePattern& a, const PresencePattern& b, Step limit) {
  auto ra = a.present_runs(limit);
  auto rb = b.present_runs(limit);
  std::vector<std::pair<Step, Step>> merged;
  merged.reserve(ra.size() + rb.size());
  std::merge(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(merged));
  std::vector<std::pair<Step, Step>> out;
  for (auto& r : merged) {
    if (!out.empty() && r.first <= out.back().second + 1)
      out.back().second = std::max(out.back().second, r.second);
    else
      out.push_back(r);
  }
  if (out.size() == 1 && out.front().first == 0 && out.front().second == limit)
    return PresencePattern::always();
  return PresencePattern::in_intervals(std::move(out));
}

PresencePattern compress_steps(std::vector<Step> steps, Step limit) {
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  if (steps.size() >= 3) {
    Step stride = steps[1] - steps[0];
    bool regular = stride > 1;
    for (size_t i = 2; regular && i < steps.size(); ++i)
      regular = steps[i] - steps[i - 1] == stride;
    // No truncated tail: a periodic pattern would fire again within the limit.
    if (regular && steps.back() + stride > limit && steps.front() < stride)
      return PresencePattern::periodic(steps.front(), 1, stride - 1);
  }
  return PresencePattern::at_steps(std::move(steps));
}

}  // namespace texplore
