#include "texplore/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace texplore {

namespace {

Json presence_to_json(const PresencePattern& p) {
  Json j;
  switch (p.kind()) {
    case PresenceKind::Always:
      j["type"] = "always";
      break;
    case PresenceKind::Steps:
      j["type"] = "steps";
      j["steps"] = p.steps();
      break;
    case PresenceKind::Intervals: {
      j["type"] = "intervals";
      Json arr = Json::array();
      for (auto& [a, b] : p.intervals()) arr.push_back(Json::array({a, b}));
      j["intervals"] = std::move(arr);
      break;
    }
    case PresenceKind::Periodic:
      j["type"] = "periodic";
      j["offset"] = p.periodic_offset();
      j["present"] = p.periodic_present();
      j["absent"] = p.periodic_absent();
      break;
  }
  return j;
}

PresencePattern presence_from_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "always") return PresencePattern::always();
  if (type == "steps") return PresencePattern::at_steps(j.at("steps").get<std::vector<Step>>());
  if (type == "intervals") {
    std::vector<std::pair<Step, Step>> ivals;
    for (auto& e : j.at("intervals")) {
      if (!e.is_array() || e.size() != 2) throw ShapeError("interval must be [a,b]");
      ivals.emplace_back(e[0].get<Step>(), e[1].get<Step>());
    }
    return PresencePattern::in_intervals(std::move(ivals));
  }
  if (type == "periodic")
    return PresencePattern::periodic(j.at("offset").get<Step>(), j.at("present").get<Step>(),
                                     j.at("absent").get<Step>());
  throw ShapeError("unknown presence type: " + type);
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  const TemporalGraph& g = inst.graph;
  Json j;
  j["n"] = g.n();
  j["start"] = inst.start;
  j["lifetime"] = g.lifetime();
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Json je;
    je["u"] = g.edge(e).u;
    je["v"] = g.edge(e).v;
    je["presence"] = presence_to_json(g.presence(e));
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

Instance instance_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    Vertex start = j.at("start").get<Vertex>();
    Step lifetime = j.at("lifetime").get<Step>();
    std::vector<Edge> edges;
    std::vector<PresencePattern> presence;
    for (auto& je : j.at("edges")) {
      edges.push_back(Edge{je.at("u").get<Vertex>(), je.at("v").get<Vertex>()});
      presence.push_back(presence_from_json(je.at("presence")));
    }
    return make_instance(TemporalGraph(n, std::move(edges), std::move(presence), lifetime), start);
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("bad instance json: ") + ex.what());
  }
}

Json walk_to_json(const TemporalWalk& w) {
  Json j;
  j["start"] = w.start;
  Json moves = Json::array();
  for (const Move& m : w.moves) moves.push_back(Json::array({m.step, m.to}));
  j["moves"] = std::move(moves);
  return j;
}

TemporalWalk walk_from_json(const Json& j) {
  try {
    TemporalWalk w;
    w.start = j.at("start").get<Vertex>();
    for (auto& m : j.at("moves")) {
      if (!m.is_array() || m.size() != 2) throw ShapeError("move must be [step,to]");
      w.moves.push_back(Move{m[0].get<Step>(), m[1].get<Vertex>()});
    }
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("bad walk json: ") + ex.what());
  }
}

Json schedule_to_json(const MultiAgentSchedule& sched) {
  Json j;
  Json agents = Json::array();
  for (const TemporalWalk& w : sched.agents) agents.push_back(walk_to_json(w));
  j["agents"] = std::move(agents);
  return j;
}

MultiAgentSchedule schedule_from_json(const Json& j) {
  try {
    MultiAgentSchedule s;
    for (auto& a : j.at("agents")) s.agents.push_back(walk_from_json(a));
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("bad schedule json: ") + ex.what());
  }
}

Json td_to_json(const TreeDecomposition& td) {
  Json j;
  Json bags = Json::array();
  for (auto& b : td.bags) bags.push_back(b);
  j["bags"] = std::move(bags);
  Json tree = Json::array();
  for (auto& [a, b] : td.tree) tree.push_back(Json::array({a, b}));
  j["tree"] = std::move(tree);
  return j;
}

TreeDecomposition td_from_json(const Json& j) {
  try {
    TreeDecomposition td;
    for (auto& b : j.at("bags")) td.bags.push_back(b.get<std::vector<Vertex>>());
    for (auto& e : j.at("tree")) {
      if (!e.is_array() || e.size() != 2) throw ShapeError("tree edge must be [a,b]");
      td.tree.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return td;
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("bad decomposition json: ") + ex.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("json parse error: ") + ex.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ShapeError("cannot write " + path);
  out << dump_json(j);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

}  // namespace texplore
