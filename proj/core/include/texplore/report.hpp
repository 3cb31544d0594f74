#pragma once

#include <string>

#include "texplore/temporal_graph.hpp"
#include "texplore/walk.hpp"

namespace texplore {

struct TraceReport {
  bool valid = false;
  std::string text;  // position trace when valid, violation report otherwise
};

// Position trace of a schedule: one line per position, `t=<time> at <v>`,
// with ` *` appended to moves that first-visit their destination. Multi-agent
// schedules get an `agent <k>:` header per walk. The format is stable and
// golden-tested.
TraceReport render_trace(const Instance& inst, const MultiAgentSchedule& sched);

}  // namespace texplore
