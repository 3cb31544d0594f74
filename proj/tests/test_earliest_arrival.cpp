#include <doctest.h>

#include "helpers.hpp"
#include "texplore/earliest_arrival.hpp"
#include "texplore/generators.hpp"
#include "texplore/rng.hpp"

using namespace texplore;
using texplore::testing::static_instance;
using texplore::testing::tiny_underlying;

TEST_CASE("staying put reaches the source at t0") {
  auto inst = static_instance(3, path_graph(3), 10);
  auto ea = earliest_arrival(inst.graph, 1, 4);
  CHECK(ea.time[1] == 4);
  CHECK(ea.time[0] == 5);
  CHECK(ea.time[2] == 5);
}

TEST_CASE("single always-present edge crossed at once") {
  auto inst = static_instance(2, {{0, 1}}, 10);
  auto ea = earliest_arrival(inst.graph, 0, 0);
  CHECK(ea.time[1] == 1);
}

TEST_CASE("rotating pair: second leaf needs the center to swing back") {
  // Exhaustively verified on the four-vertex rotating construction: from
  // leaf 2 at time 1, leaf 3 is reachable at time 4 and no earlier.
  Instance inst = rotating_star(2);
  auto ea = earliest_arrival(inst.graph, 2, 1);
  CHECK(ea.time[3] == 4);

  // exhaustive check over all walks by stepwise expansion
  std::vector<std::vector<Time>> best(inst.graph.n(),
                                      std::vector<Time>(inst.graph.lifetime() + 2, kUnreachable));
  best[2][1] = 1;
  Time found = kUnreachable;
  for (Step t = 1; t <= inst.graph.lifetime(); ++t) {
    for (Vertex v = 0; v < inst.graph.n(); ++v) {
      if (best[v][t] == kUnreachable) continue;
      best[v][t + 1] = std::min(best[v][t + 1], best[v][t]);
      for (auto [w, e] : inst.graph.neighbors(v))
        if (inst.graph.presence(e).contains(t))
          best[w][t + 1] = std::min(best[w][t + 1], t + 1);
    }
  }
  for (Step t = 0; t <= inst.graph.lifetime() + 1; ++t)
    if (best[3][t] != kUnreachable) {
      found = t;
      break;
    }
  CHECK(found == 4);
}

TEST_CASE("extracted walks validate and arrive at the reported time") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(4, 14));
    Instance inst =
        random_realization(n, tiny_underlying(n, rng.next()), rng.uniform(20, 60), 0.3, rng.next());
    Vertex from = static_cast<Vertex>(rng.uniform(0, n - 1));
    Step t0 = rng.uniform(0, 10);
    auto ea = earliest_arrival(inst.graph, from, t0);
    for (Vertex v = 0; v < n; ++v) {
      if (!ea.reachable(v) || v == from) continue;
      TemporalWalk w = ea.walk_to(v);
      auto check = check_walk(inst.graph, w);
      CHECK(check.ok);
      CHECK(w.end() == v);
      CHECK(w.end_time() == ea.time[v]);
    }
  }
}

TEST_CASE("earliest arrival is monotone in the start time") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(4, 12));
    Instance inst =
        random_realization(n, tiny_underlying(n, rng.next()), rng.uniform(20, 50), 0.4, rng.next());
    Vertex from = static_cast<Vertex>(rng.uniform(0, n - 1));
    Step t0 = rng.uniform(0, 8);
    Step t1 = t0 + rng.uniform(1, 6);
    auto ea0 = earliest_arrival(inst.graph, from, t0);
    auto ea1 = earliest_arrival(inst.graph, from, t1);
    for (Vertex v = 0; v < n; ++v) CHECK(ea0.time[v] <= ea1.time[v]);
  }
}

TEST_CASE("plan_reach degenerate and simple cases") {
  auto inst = static_instance(3, path_graph(3), 10);

  std::vector<Vertex> just_zero{0};
  TemporalWalk stay = plan_reach(inst.graph, 0, 0, 3, just_zero);
  CHECK(stay.moves.empty());
  CHECK(stay.end_time() == 3);

  std::vector<Vertex> all{0, 1, 2};
  TemporalWalk w = plan_reach(inst.graph, 0, 2, 0, all);
  CHECK(w.end() == 2);
  CHECK(w.end_time() <= 2);
  CHECK(check_walk(inst.graph, w).ok);
}

TEST_CASE("plan_reach with the whole vertex set lands within n-1 steps") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.uniform(4, 12));
    Instance inst =
        random_realization(n, tiny_underlying(n, rng.next()), 3 * n + 20, 0.3, rng.next());
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    Vertex from = static_cast<Vertex>(rng.uniform(0, n - 1));
    Vertex to = static_cast<Vertex>(rng.uniform(0, n - 1));
    Step t0 = rng.uniform(0, n);
    TemporalWalk w = plan_reach(inst.graph, from, to, t0, all);
    CHECK(w.end() == to);
    CHECK(w.end_time() <= t0 + n - 1);
    CHECK(check_walk(inst.graph, w).ok);
  }
}

TEST_CASE("plan_reach reports the first disconnected step") {
  // two components within H: {0,1} and {2}, joined only outside H
  auto inst = static_instance(4, {{0, 1}, {1, 3}, {3, 2}}, 10);
  std::vector<Vertex> H{0, 1, 2};
  try {
    plan_reach(inst.graph, 0, 2, 0, H);
    FAIL("expected ReachabilityError");
  } catch (const ReachabilityError& ex) {
    CHECK(ex.step == 0);
  }
}

TEST_CASE("views hide steps and vertices") {
  Instance inst = cycle_2n3(5);
  // restrict to the steps where edge {0,1} is present
  std::vector<Step> late;
  for (Step t = 3; t <= inst.graph.lifetime(); ++t) late.push_back(t);
  StepView view(inst.graph, late);
  auto e01 = *inst.graph.find_edge(0, 1);
  CHECK(view.edge_present(e01, 0));
  CHECK(view.at(0) == 3);

  auto ea = earliest_arrival(view, 0, 0);
  CHECK(ea.time[1] == 1);  // view time: crossed at view step 0

  TemporalWalk lifted = view.lift(ea.walk_to(1));
  CHECK(lifted.moves.front().step == 3);
  CHECK(check_walk(inst.graph, lifted).ok);

  std::vector<Vertex> visible{0, 1, 2};
  StepView masked = view.restrict_vertices(visible);
  auto ea2 = earliest_arrival(masked, 0, 0);
  CHECK_FALSE(ea2.reachable(4));
}
