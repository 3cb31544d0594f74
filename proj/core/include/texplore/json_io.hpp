#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "texplore/temporal_graph.hpp"
#include "texplore/tree_decomposition.hpp"
#include "texplore/walk.hpp"

namespace texplore {

using Json = nlohmann::ordered_json;

// Instance format:
//   {"n":int,"start":int,"lifetime":int,
//    "edges":[{"u":int,"v":int,"presence":{"type":"always"}} , ...]}
// presence types: "always" | "steps" (steps:[...]) | "intervals"
// (intervals:[[a,b],...]) | "periodic" (offset, present, absent).
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// Schedule format: {"agents":[{"start":int,"moves":[[step,to],...]},...]}
Json schedule_to_json(const MultiAgentSchedule& sched);
MultiAgentSchedule schedule_from_json(const Json& j);

Json walk_to_json(const TemporalWalk& w);
TemporalWalk walk_from_json(const Json& j);

// Tree decomposition format: {"bags":[[v,...],...],"tree":[[a,b],...]}
Json td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const Json& j);

std::string dump_json(const Json& j);  // canonical text form (2-space indent)
Json parse_json(const std::string& text);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace texplore
