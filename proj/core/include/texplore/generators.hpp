#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "texplore/temporal_graph.hpp"
#include "texplore/tree_decomposition.hpp"
#include "texplore/walk.hpp"

namespace texplore {

// ---------------------------------------------------------------------------
// Underlying graphs (static edge lists) used as generator and test substrates.
// ---------------------------------------------------------------------------
std::vector<Edge> cycle_graph(int n);
std::vector<Edge> path_graph(int n);
std::vector<Edge> star_graph(int n);                      // center 0
std::vector<Edge> complete_graph(int n);
std::vector<Edge> grid_2xn(int cols);                     // vertex (row r, col c) = 2c + r
std::vector<Edge> cycle_with_chord(int n, Vertex a, Vertex b);

// Random series-parallel graph with its width-<=2 decomposition built during
// composition. Terminals are vertices 0 and 1.
struct SpGraph {
  int n = 0;
  std::vector<Edge> edges;
  TreeDecomposition td;
};
SpGraph series_parallel_graph(int target_n, uint64_t seed);

// ---------------------------------------------------------------------------
// Instance families
// ---------------------------------------------------------------------------

// 2n vertices c_0..c_{n-1}, l_0..l_{n-1}; the snapshot at step i is the star
// centered at c_{i mod n}. Start c_0. Needs about n*n steps to explore.
Instance rotating_star(int n, Step lifetime = -1);

// n/d rotating-star blocks of d vertices (parameter d/2), consecutive blocks
// sharing a leaf vertex; every block rotates in lockstep from step 0.
// Vertex count n - (n/d - 1); underlying max degree exactly d.
Instance chained_stars(int d, int n, Step lifetime = -1);

// Planar max-degree-4 family whose every snapshot is a simple path. Rounds of
// n/2 steps replace the horizontal edges of selected columns by cross edges,
// cumulatively; after the last round the configuration persists.
Instance planar_rounds(int n, Step lifetime = -1);

// Cycle u,v,w,...: {u,v} absent for the first n-2 steps then present; {v,w}
// present for the first n-2 steps then absent; the rest always present.
// Start u. Optimal exploration takes exactly 2n-3 steps.
Instance cycle_2n3(int n, Step lifetime = -1);

// Hardness gadget: rotating-star skeleton with n = n'^c centers where each
// leaf is replaced by a copy of a base graph; copies are linked by one-step
// "quick link" edges between consecutive copies.
struct GadgetSpec {
  int n_prime = 0;                 // base graph vertex count
  std::vector<Edge> base_edges;    // base graph G' (connected)
  Vertex s = 0;                    // entry terminal of each copy
  Vertex t = 0;                    // exit terminal of each copy
  int c = 1;                       // center count exponent: n = n'^c
};

struct GadgetResult {
  Instance instance;
  int centers = 0;                          // n
  long long total_vertices = 0;             // n * (1 + n')
  std::vector<EdgeId> quick_links;          // edge ids, copy order
  std::optional<MultiAgentSchedule> witness;  // present when a ham path was given
};

// ham_path: a Hamiltonian s-t path of the base graph (base-vertex ids), or
// nullopt to skip the witness schedule.
GadgetResult hardness_gadget(const GadgetSpec& spec,
                             const std::optional<std::vector<Vertex>>& ham_path,
                             Step lifetime = -1);

// Random always-connected realization of an underlying graph: at each change
// point (every `period` steps) the present set is a fresh random spanning
// tree plus each remaining edge independently with probability `density`.
Instance random_realization(int n, const std::vector<Edge>& underlying, Step lifetime,
                            double density, uint64_t seed, Step period = 1,
                            Vertex start = 0);

// Per-edge absence-run bounds: every maximal absence run of edge e must have
// length in [ceil(max_run[e]/c), max_run[e]].
struct RegularityProfile {
  std::vector<Step> max_run;  // I_e per edge, >= 1
  double c = 2.0;             // > 1
};

// Emits an instance where each edge is present for single steps separated by
// absence runs drawn per period from the profile's window, scheduled so that
// every step stays connected. Fails (with the seed in the message) when the
// bounded retries cannot reach an always-connected schedule.
Instance regular_instance(int n, const std::vector<Edge>& underlying,
                          const RegularityProfile& profile, uint64_t seed,
                          Step lifetime = -1, int max_retries = 20);

// Stock underlying graph + profile for the regular family: two spanning trees
// alternating parities (run length exactly 1) plus sparse long-gap extras.
// Always schedulable; total edges <= 3n.
struct RegularFamily {
  std::vector<Edge> edges;
  RegularityProfile profile;
};
RegularFamily regular_family_graph(int n, uint64_t seed);

}  // namespace texplore
