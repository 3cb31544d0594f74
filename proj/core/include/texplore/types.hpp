#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace texplore {

using Vertex = int;
using EdgeId = int;
using Step = long long;  // index of a time step
using Time = long long;  // arrival times (a move at step i completes at time i+1)

inline constexpr Time kUnreachable = std::numeric_limits<Time>::max() / 4;

// Malformed or incompatible input: bad graph shapes, broken files, parameter
// violations. CLI maps this to exit code 2.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithm needed a step past the instance lifetime. Exit code 3.
class LifetimeExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A reachability precondition failed: the vertex set handed to plan_reach was
// not source-target connected at some step. Carries the first bad step.
class ReachabilityError : public std::runtime_error {
 public:
  ReachabilityError(const std::string& msg, Step step)
      : std::runtime_error(msg), step(step) {}
  Step step;
};

}  // namespace texplore
