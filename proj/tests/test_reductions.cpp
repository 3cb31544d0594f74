#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "texplore/earliest_arrival.hpp"
#include "texplore/explorers.hpp"
#include "texplore/generators.hpp"
#include "texplore/reductions.hpp"
#include "texplore/rng.hpp"

using namespace texplore;
using texplore::testing::static_instance;

TEST_CASE("degenerate compression: one agent, one phase") {
  auto inst = static_instance(4, path_graph(4), 60);
  auto builder = [&](Step start) {
    MultiAgentSchedule s;
    TemporalWalk w{0, start, {}};
    for (int i = 0; i < 3; ++i) w.moves.push_back(Move{start + i, i + 1});
    s.agents = {w};
    return s;
  };
  CompressTrace trace;
  TemporalWalk x = multi_to_single(inst, 1, builder, &trace);
  auto check = validate_walk(inst, x);
  CHECK(check.ok);
  CHECK(check.visited_count == 4);
  CHECK(trace.phases.size() == 1);
  CHECK(check.arrival <= trace.t_max);
  CHECK(progress_per_phase_audit(trace).ok);
}

TEST_CASE("the compression bound arithmetic from its statement") {
  // t = 10, n = 8, k = 2: (t+n) * (ceil(k ln n) + 1) = 18 * 6 = 108
  Step t = 10;
  int n = 8, k = 2;
  Step bound = (t + n) * (static_cast<Step>(std::ceil(k * std::log(n))) + 1);
  CHECK(bound == 108);
}

TEST_CASE("two-agent compression on an always-present cycle") {
  const int n = 10;
  auto inst = static_instance(n, cycle_graph(n), 1000);
  // agent 0 sweeps clockwise, agent 1 counterclockwise; both return by
  // retracing, so the builder covers everything within t = 2n
  auto builder = [&](Step start) {
    MultiAgentSchedule s;
    TemporalWalk cw{0, start, {}};
    for (int i = 0; i < n - 1; ++i) cw.moves.push_back(Move{start + i, i + 1});
    TemporalWalk ccw{0, start, {}};
    for (int i = 0; i < n - 1; ++i) ccw.moves.push_back(Move{start + i, n - 1 - i});
    s.agents = {cw, ccw};
    return s;
  };
  CompressTrace trace;
  TemporalWalk x = multi_to_single(inst, 2, builder, &trace);
  auto check = validate_walk(inst, x);
  REQUIRE(check.ok);
  CHECK(check.visited_count == n);
  Step bound = (trace.t_max + n) *
               (static_cast<Step>(std::ceil(trace.k * std::log(n))) + 1);
  CHECK(check.arrival <= bound);
  CHECK(progress_per_phase_audit(trace).ok);
}

TEST_CASE("grid composition stays within the compression bound") {
  Rng rng(2641);
  for (int cols : {8, 16}) {
    Instance inst = random_realization(2 * cols, grid_2xn(cols), 16LL * cols * cols, 0.5,
                                       rng.next(), 2);
    GridStats stats;
    explore_grid_multi(inst, &stats);
    auto builder = [&](Step start) { return explore_grid_multi_from(inst, start); };
    CompressTrace trace;
    TemporalWalk x = multi_to_single(inst, stats.agents, builder, &trace);
    auto check = validate_walk(inst, x);
    REQUIRE(check.ok);
    CHECK(check.visited_count == 2 * cols);
    const int nv = 2 * cols;
    Step bound = (trace.t_max + nv) *
                 (static_cast<Step>(std::ceil(trace.k * std::log(nv))) + 1);
    CHECK(check.arrival <= bound);
    CHECK(progress_per_phase_audit(trace).ok);
  }
}

TEST_CASE("a builder that breaks coverage is rejected") {
  auto inst = static_instance(4, path_graph(4), 60);
  auto lazy = [&](Step start) {
    MultiAgentSchedule s;
    s.agents = {TemporalWalk{0, start, {{start, 1}}}};
    return s;
  };
  CHECK_THROWS_AS(multi_to_single(inst, 1, lazy, nullptr), ShapeError);
}

TEST_CASE("contracting a cycle edge leaves a smaller cycle") {
  auto inst = static_instance(6, cycle_graph(6), 40);
  ContractionResult res = contract_edges(inst.graph, {{0, 1}});
  CHECK(res.graph.n() == 5);
  CHECK(res.graph.edge_count() == 5);
  auto deg = res.graph.underlying_degrees();
  for (int d : deg) CHECK(d == 2);
  CHECK(res.vertex_map[0] == res.vertex_map[1]);

  ContractionResult none = contract_edges(inst.graph, {});
  CHECK(none.graph.n() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(none.vertex_map[v] == v);

  CHECK_THROWS_AS(contract_edges(inst.graph, {{0, 3}}), ShapeError);
}

TEST_CASE("parallel edges merge with presence union") {
  // triangle with one timed edge; contracting {1,2} folds edges {0,1},{0,2}
  auto edges = cycle_graph(3);
  std::vector<PresencePattern> presence{PresencePattern::in_intervals({{0, 4}}),
                                        PresencePattern::always(),
                                        PresencePattern::in_intervals({{6, 9}})};
  TemporalGraph g(3, edges, presence, 9);
  ContractionResult res = contract_edges(g, {{1, 2}});
  CHECK(res.graph.n() == 2);
  REQUIRE(res.graph.edge_count() == 1);
  for (Step t = 0; t <= 9; ++t) {
    bool expect = t <= 4 || t >= 6;
    CHECK(res.graph.presence(0).contains(t) == expect);
  }
}

TEST_CASE("transferred schedules stay valid and never arrive later") {
  Rng rng(31415);
  int done = 0;
  while (done < 50) {
    int n = static_cast<int>(rng.uniform(6, 12));
    auto underlying = cycle_graph(n);
    // contract a couple of cycle edges
    std::vector<Edge> contractions;
    int c1 = static_cast<int>(rng.uniform(0, n - 1));
    int c2 = static_cast<int>(rng.uniform(0, n - 1));
    contractions.push_back({c1, (c1 + 1) % n});
    if (c2 != c1) contractions.push_back({c2, (c2 + 1) % n});

    TemporalGraph base(
        n, underlying, std::vector<PresencePattern>(underlying.size(), PresencePattern::always()),
        static_cast<Step>(n) * n);
    ContractionResult contracted = contract_edges(base, contractions);
    if (contracted.graph.n() < 3) continue;

    // realization of the contracted graph, lifted back to the original
    Instance small = random_realization(contracted.graph.n(), contracted.graph.edges(),
                                        base.lifetime(), 0.4, rng.next());
    TemporalGraph lifted = lift_realization(n, underlying, contracted.vertex_map, small.graph);
    Instance big_inst = make_instance(std::move(lifted), 0);

    TemporalWalk walk = explore_greedy(big_inst);
    auto src = validate_walk(big_inst, walk);
    REQUIRE(src.ok);
    REQUIRE(src.visited_count == n);

    TemporalWalk image = transfer_schedule(walk, contracted.vertex_map);
    Instance target =
        make_instance(small.graph, contracted.vertex_map[big_inst.start]);
    auto dst = validate_walk(target, image);
    REQUIRE(dst.ok);
    CHECK(dst.visited_count == target.graph.n());
    CHECK(dst.arrival <= src.arrival);
    ++done;
  }
}

TEST_CASE("a walk of only contracted moves transfers to the empty walk") {
  auto inst = static_instance(3, path_graph(3), 20);
  ContractionResult res = contract_edges(inst.graph, {{0, 1}, {1, 2}});
  CHECK(res.graph.n() == 1);
  TemporalWalk w{0, 0, {{0, 1}, {1, 2}, {2, 1}}};
  TemporalWalk image = transfer_schedule(w, res.vertex_map);
  CHECK(image.moves.empty());
  CHECK(image.start == 0);
}
