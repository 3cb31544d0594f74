#include <doctest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <set>

#include "helpers.hpp"
#include "texplore/generators.hpp"
#include "texplore/oracle.hpp"
#include "texplore/rng.hpp"
#include "texplore/union_find.hpp"
#include "texplore/walk.hpp"

using namespace texplore;

namespace {

// Snapshot must be exactly the star over all vertices centered at c.
void check_star_snapshot(const TemporalGraph& g, Step t, Vertex center) {
  auto snap = g.snapshot(t);
  CHECK(static_cast<int>(snap.size()) == g.n() - 1);
  std::set<Vertex> others;
  for (EdgeId e : snap) {
    Vertex u = g.edge(e).u, v = g.edge(e).v;
    CHECK((u == center || v == center));
    others.insert(u == center ? v : u);
  }
  CHECK(static_cast<int>(others.size()) == g.n() - 1);
}

bool is_simple_path_snapshot(const TemporalGraph& g, Step t) {
  auto snap = g.snapshot(t);
  if (static_cast<int>(snap.size()) != g.n() - 1) return false;
  std::vector<int> deg(g.n(), 0);
  UnionFind uf(g.n());
  for (EdgeId e : snap) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
    uf.unite(g.edge(e).u, g.edge(e).v);
  }
  if (uf.components() != 1) return false;
  int ones = 0;
  for (int d : deg) {
    if (d > 2) return false;
    if (d == 1) ++ones;
  }
  return ones == 2;
}

}  // namespace

TEST_CASE("rotating star snapshots are stars at the rotating center") {
  Instance inst = rotating_star(3);
  check_star_snapshot(inst.graph, 0, 0);
  check_star_snapshot(inst.graph, 4, 1);  // 4 mod 3 = 1
  CHECK(inst.start == 0);
  CHECK(inst.graph.n() == 6);
  CHECK(inst.graph.lifetime() >= 36);

  for (int n = 2; n <= 8; ++n) {
    Instance family = rotating_star(n);
    for (Step t = 0; t < n; ++t) check_star_snapshot(family.graph, t, static_cast<Vertex>(t % n));
    CHECK(family.graph.always_connected().ok);
  }
}

TEST_CASE("rotating star exact optimum at n=2") {
  OracleResult res = exact_optimum(rotating_star(2));
  CHECK(res.optimum == 4);
  CHECK(exhaustive_enum(rotating_star(2)) == 4);
}

TEST_CASE("chained stars: counts, degrees, connectivity") {
  Instance inst = chained_stars(4, 8);
  CHECK(inst.graph.n() == 7);  // 8 - (2 - 1)
  auto deg = inst.graph.underlying_degrees();
  int deg4 = 0, deg3 = 0, deg2 = 0;
  for (int d : deg) {
    CHECK(d <= 4);
    if (d == 4) ++deg4;
    if (d == 3) ++deg3;
    if (d == 2) ++deg2;
  }
  CHECK(deg4 == 1);  // the merged vertex
  CHECK(deg3 == 4);  // centers have degree d-1
  CHECK(deg2 == 2);  // outer leaves have degree d/2
  CHECK(inst.graph.always_connected().ok);
  CHECK(*std::max_element(deg.begin(), deg.end()) == 4);

  Instance big = chained_stars(6, 18);
  CHECK(big.graph.n() == 18 - 2);
  auto bdeg = big.graph.underlying_degrees();
  CHECK(*std::max_element(bdeg.begin(), bdeg.end()) == 6);
  CHECK(big.graph.always_connected().ok);

  CHECK_THROWS_AS(chained_stars(3, 9), ShapeError);
  CHECK_THROWS_AS(chained_stars(4, 10), ShapeError);
}

TEST_CASE("planar rounds: column replacement schedule") {
  Instance inst = planar_rounds(32);
  const TemporalGraph& g = inst.graph;
  // round 1 replaces column 4; round 2 replaces columns 2 and 6
  auto horiz = [&](int col) { return *g.find_edge(col - 1, col); };  // top row ids are 0..7
  CHECK(g.edge_present(horiz(4), 15));
  CHECK_FALSE(g.edge_present(horiz(4), 16));  // round 1 starts at step 16
  CHECK(g.edge_present(horiz(2), 31));
  CHECK_FALSE(g.edge_present(horiz(2), 32));
  CHECK(g.edge_present(horiz(6), 31));
  CHECK_FALSE(g.edge_present(horiz(6), 32));
}

TEST_CASE("planar rounds: every snapshot is a simple path, planar, max degree 4") {
  for (int n : {8, 16, 32, 64}) {
    Instance inst = planar_rounds(n);
    const TemporalGraph& g = inst.graph;
    CHECK(g.n() == n);
    auto deg = g.underlying_degrees();
    CHECK(*std::max_element(deg.begin(), deg.end()) <= 4);

    for (Step cp : g.change_points()) CHECK(is_simple_path_snapshot(g, cp));

    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.n());
    for (auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
    CHECK(boost::boyer_myrvold_planarity_test(bg));
  }
  CHECK_THROWS_AS(planar_rounds(12), ShapeError);
  CHECK_THROWS_AS(planar_rounds(4), ShapeError);
}

TEST_CASE("cycle_2n3 pattern and optimum") {
  Instance inst = cycle_2n3(5);
  const TemporalGraph& g = inst.graph;
  auto e01 = *g.find_edge(0, 1);
  auto e12 = *g.find_edge(1, 2);
  CHECK_FALSE(g.edge_present(e01, 2));
  CHECK(g.edge_present(e12, 2));
  CHECK(g.edge_present(e01, 3));   // present from n-2 on
  CHECK_FALSE(g.edge_present(e12, 3));
  CHECK(g.always_connected().ok);

  for (int n : {4, 5, 6}) {
    Instance family = cycle_2n3(n);
    CHECK(family.graph.always_connected().ok);
    OracleResult res = exact_optimum(family);
    CHECK(res.optimum == 2 * n - 3);
  }
}

TEST_CASE("hardness gadget structure") {
  // single-edge base with one center power: two centers, six vertices, no
  // quick links (the index range 1 <= i < n-1 is empty)
  GadgetSpec tiny;
  tiny.n_prime = 2;
  tiny.base_edges = {{0, 1}};
  tiny.s = 0;
  tiny.t = 1;
  tiny.c = 1;
  GadgetResult r0 = hardness_gadget(tiny, std::nullopt);
  CHECK(r0.centers == 2);
  CHECK(r0.total_vertices == 6);
  CHECK(r0.quick_links.empty());
  CHECK(r0.instance.graph.always_connected().ok);

  // vertex-count formula n* = n (1 + n')
  GadgetSpec spec;
  spec.n_prime = 3;
  spec.base_edges = path_graph(3);
  spec.s = 0;
  spec.t = 2;
  spec.c = 2;
  GadgetResult r1 = hardness_gadget(spec, std::nullopt);
  CHECK(r1.centers == 9);
  CHECK(r1.total_vertices == 36);
  CHECK(r1.instance.graph.n() == 36);
  // quick link for copy i lives at step i*n' and nowhere else
  for (size_t i = 0; i < r1.quick_links.size(); ++i) {
    const PresencePattern& p = r1.instance.graph.presence(r1.quick_links[i]);
    REQUIRE(p.kind() == PresenceKind::Steps);
    REQUIRE(p.steps().size() == 1);
    CHECK(p.steps()[0] == static_cast<Step>(i + 1) * spec.n_prime);
  }
  CHECK(r1.instance.graph.always_connected().ok);
}

TEST_CASE("hardness gadget witness validates with linear arrival") {
  GadgetSpec spec;
  spec.n_prime = 4;
  spec.base_edges = path_graph(4);
  spec.s = 0;
  spec.t = 3;
  spec.c = 1;
  std::vector<Vertex> ham{0, 1, 2, 3};
  GadgetResult res = hardness_gadget(spec, ham);
  REQUIRE(res.witness.has_value());
  auto check = validate_schedule(res.instance, *res.witness);
  CHECK(check.ok);
  CHECK(check.coverage);
  CHECK(check.arrival <= 5 * res.total_vertices);

  std::vector<Vertex> bad{0, 2, 1, 3};
  CHECK_THROWS_AS(hardness_gadget(spec, bad), ShapeError);
}

TEST_CASE("random realizations: density one, determinism, connectivity") {
  auto underlying = cycle_graph(6);
  Instance full = random_realization(6, underlying, 20, 1.0, 5);
  for (Step t = 0; t <= 20; ++t)
    CHECK(static_cast<int>(full.graph.snapshot(t).size()) == 6);

  Instance a = random_realization(6, underlying, 30, 0.4, 42);
  Instance b = random_realization(6, underlying, 30, 0.4, 42);
  CHECK(a.graph.change_points() == b.graph.change_points());
  for (EdgeId e = 0; e < a.graph.edge_count(); ++e)
    CHECK(a.graph.presence(e) == b.graph.presence(e));

  // tree-only steps on a cycle drop at most one edge
  Instance sparse = random_realization(6, underlying, 30, 0.0, 9);
  for (Step t = 0; t <= 30; ++t)
    CHECK(static_cast<int>(sparse.graph.snapshot(t).size()) >= 5);
  CHECK(sparse.graph.always_connected().ok);
}

TEST_CASE("regular instances respect run bounds and stay connected") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    int n = static_cast<int>(rng.uniform(16, 48));
    RegularFamily fam = regular_family_graph(n, rng.next());
    CHECK(static_cast<int>(fam.edges.size()) <= 3 * n);
    Instance inst = regular_instance(n, fam.edges, fam.profile, rng.next());
    CHECK(inst.graph.always_connected().ok);

    // every maximal absence run within [ceil(I/c), I]; boundary runs only
    // need the upper bound
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      Step I = fam.profile.max_run[e];
      Step lo = static_cast<Step>(std::ceil(static_cast<double>(I) / fam.profile.c - 1e-12));
      auto runs = inst.graph.presence(e).present_runs(inst.graph.lifetime());
      REQUIRE_FALSE(runs.empty());
      CHECK(runs.front().first <= I);
      for (size_t i = 1; i < runs.size(); ++i) {
        Step gap = runs[i].first - runs[i - 1].second - 1;
        CHECK(gap <= I);
        CHECK(gap >= lo);
      }
    }
  }

  // determinism under the seed
  RegularFamily fam = regular_family_graph(24, 77);
  Instance x = regular_instance(24, fam.edges, fam.profile, 123);
  Instance y = regular_instance(24, fam.edges, fam.profile, 123);
  for (EdgeId e = 0; e < x.graph.edge_count(); ++e)
    CHECK(x.graph.presence(e) == y.graph.presence(e));
}

TEST_CASE("series-parallel graphs come with valid width-2 decompositions") {
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    int target = static_cast<int>(rng.uniform(5, 40));
    SpGraph sp = series_parallel_graph(target, rng.next());
    CHECK(sp.n >= 2);
    auto check = validate_td(sp.n, sp.edges, sp.td);
    CHECK(check.ok);
    CHECK(sp.td.width() <= 2);
    UnionFind uf(sp.n);
    for (auto& e : sp.edges) uf.unite(e.u, e.v);
    CHECK(uf.components() == 1);
  }
}

TEST_CASE("every generator output is always connected") {
  CHECK(rotating_star(5).graph.always_connected().ok);
  CHECK(chained_stars(4, 16).graph.always_connected().ok);
  CHECK(planar_rounds(16).graph.always_connected().ok);
  CHECK(cycle_2n3(7).graph.always_connected().ok);
  Rng rng(61);
  for (int t = 0; t < 5; ++t) {
    int n = static_cast<int>(rng.uniform(5, 12));
    Instance inst = random_realization(
        n, texplore::testing::tiny_underlying(n, rng.next()), 40, 0.3, rng.next());
    CHECK(inst.graph.always_connected().ok);
  }
}
