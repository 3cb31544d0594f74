#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "texplore/generators.hpp"
#include "texplore/temporal_graph.hpp"
#include "texplore/tree_decomposition.hpp"

namespace texplore {

// One benchmark cell per (family, n, algo, seed). Rows are deterministic
// under seeds except for wall_ms.
struct BenchSpec {
  std::vector<std::string> families;
  std::vector<int> sizes;
  std::vector<std::string> algos;
  int seeds = 1;
  int jobs = 1;
};

struct BenchRow {
  std::string family;
  int n = 0;
  uint64_t seed = 0;
  std::string algo;
  int agents = 0;
  Time arrival = -1;
  bool valid = false;
  double wall_ms = 0.0;
  std::string note;
};

// Instance plus the side inputs some algorithms need.
struct PreparedInstance {
  Instance instance;
  std::optional<TreeDecomposition> td;
  std::optional<RegularityProfile> profile;
};

// Families: rotating-star, chained-stars, planar-rounds, gadget, cycle-2n3,
// random-cycle, random-chord, random-grid, random-sp, regular.
PreparedInstance bench_instance(const std::string& family, int n, uint64_t seed);

// Algorithms: greedy, cycle3n, cycle-opt, chord, grid, treewidth,
// regular-mst, oracle. Returns nullopt (with a reason) for pairings that do
// not type-check, e.g. cycle algorithms off cycles.
std::optional<std::string> bench_incompatibility(const std::string& family,
                                                 const std::string& algo, int n);

std::vector<BenchRow> run_bench(const BenchSpec& spec);

extern const char* kBenchCsvHeader;  // family,n,seed,algo,agents,arrival,valid,wall_ms,note
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
std::vector<BenchRow> read_bench_csv(std::istream& in);

}  // namespace texplore
