#include "texplore/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "texplore/explorers.hpp"
#include "texplore/json_io.hpp"
#include "texplore/oracle.hpp"

namespace texplore {

const char* kBenchCsvHeader = "family,n,seed,algo,agents,arrival,valid,wall_ms,note";

PreparedInstance bench_instance(const std::string& family, int n, uint64_t seed) {
  PreparedInstance out;
  if (family == "rotating-star") {
    out.instance = rotating_star(n);
  } else if (family == "chained-stars") {
    int nn = (n + 3) / 4 * 4;
    out.instance = chained_stars(4, std::max(4, nn));
  } else if (family == "planar-rounds") {
    out.instance = planar_rounds(n);
  } else if (family == "cycle-2n3") {
    out.instance = cycle_2n3(n);
  } else if (family == "gadget") {
    GadgetSpec spec;
    spec.n_prime = std::max(2, n);
    spec.base_edges = path_graph(spec.n_prime);
    spec.s = 0;
    spec.t = spec.n_prime - 1;
    spec.c = 1;
    std::vector<Vertex> ham(spec.n_prime);
    for (int i = 0; i < spec.n_prime; ++i) ham[i] = i;
    out.instance = hardness_gadget(spec, ham).instance;
  } else if (family == "random-cycle") {
    Step life = std::max<Step>(static_cast<Step>(n) * n, 6LL * n);
    out.instance = random_realization(n, cycle_graph(n), life, 0.3, seed);
  } else if (family == "random-chord") {
    Step life = std::max<Step>(static_cast<Step>(n) * n, 12LL * n);
    out.instance = random_realization(n, cycle_with_chord(n, 0, n / 2), life, 0.4, seed);
  } else if (family == "random-grid") {
    Step life = 4LL * n * n;  // (2n)^2 for 2n vertices
    Step period = std::max<Step>(1, n / 8);
    out.instance = random_realization(2 * n, grid_2xn(n), life, 0.5, seed, period);
  } else if (family == "random-sp") {
    SpGraph sp = series_parallel_graph(n, seed ^ 0xabcdefULL);
    Step life = std::max<Step>(static_cast<Step>(sp.n) * sp.n,
                               static_cast<Step>(200.0 * std::pow(sp.n, 1.5)));
    Step period = std::max<Step>(1, sp.n / 8);
    out.instance = random_realization(sp.n, sp.edges, life, 0.85, seed, period);
    out.td = std::move(sp.td);
  } else if (family == "regular") {
    RegularFamily fam = regular_family_graph(n, seed ^ 0x5eedULL);
    out.instance = regular_instance(n, fam.edges, fam.profile, seed);
    out.profile = std::move(fam.profile);
  } else {
    throw ShapeError("unknown family: " + family);
  }
  return out;
}

std::optional<std::string> bench_incompatibility(const std::string& family,
                                                 const std::string& algo, int n) {
  auto is_cycle_family = family == "random-cycle" || family == "cycle-2n3";
  if (algo == "cycle3n" || algo == "cycle-opt") {
    if (!is_cycle_family) return "cycle algorithm needs a temporal cycle";
  } else if (algo == "chord") {
    if (family != "random-chord") return "chord algorithm needs a cycle with one chord";
  } else if (algo == "grid") {
    if (family != "random-grid") return "grid algorithm needs a 2xN grid";
  } else if (algo == "treewidth") {
    if (family != "random-sp") return "treewidth algorithm needs a decomposition";
  } else if (algo == "regular-mst") {
    if (family != "regular") return "regular-mst needs a regularity profile";
  } else if (algo == "oracle") {
    int vertices = n;
    if (family == "rotating-star") vertices = 2 * n;
    if (family == "random-grid") vertices = 2 * n;
    if (family == "gadget") vertices = n * (1 + n);
    if (vertices > 15) return "oracle limited to 15 vertices";
  } else if (algo != "greedy") {
    return "unknown algorithm: " + algo;
  }
  return std::nullopt;
}

namespace {

BenchRow run_cell(const std::string& family, int n, uint64_t seed, const std::string& algo) {
  BenchRow row;
  row.family = family;
  row.n = n;
  row.seed = seed;
  row.algo = algo;
  if (auto why = bench_incompatibility(family, algo, n)) {
    row.note = "skip: " + *why;
    return row;
  }
  try {
    PreparedInstance prep = bench_instance(family, n, seed);
    MultiAgentSchedule sched;
    auto t0 = std::chrono::steady_clock::now();
    if (algo == "greedy") {
      sched.agents = {explore_greedy(prep.instance)};
    } else if (algo == "cycle3n") {
      sched.agents = {explore_cycle_3n(prep.instance)};
    } else if (algo == "cycle-opt") {
      auto res = cycle_optimal(prep.instance);
      if (!res.complete) throw LifetimeExhausted("no cycle schedule finished in time");
      sched.agents = {res.walk};
    } else if (algo == "chord") {
      sched.agents = {explore_chord(prep.instance)};
    } else if (algo == "grid") {
      sched = explore_grid_multi(prep.instance);
    } else if (algo == "treewidth") {
      sched.agents = {explore_treewidth(prep.instance, *prep.td)};
    } else if (algo == "regular-mst") {
      sched.agents = {explore_regular_mst(prep.instance, prep.profile).walk};
    } else if (algo == "oracle") {
      sched.agents = {exact_optimum(prep.instance).witness};
    }
    auto t1 = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    // Every reported row must revalidate from its serialized form.
    MultiAgentSchedule reloaded = schedule_from_json(parse_json(dump_json(schedule_to_json(sched))));
    ScheduleCheck check = validate_schedule(prep.instance, reloaded);
    row.valid = check.ok && check.coverage;
    row.arrival = row.valid ? check.arrival : -1;
    row.agents = static_cast<int>(sched.agents.size());
    if (!row.valid) row.note = "validation failed";
  } catch (const std::exception& ex) {
    row.note = std::string("error: ") + ex.what();
  }
  std::replace(row.note.begin(), row.note.end(), ',', ';');
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  struct Cell {
    std::string family;
    int n;
    uint64_t seed;
    std::string algo;
  };
  std::vector<Cell> cells;
  for (auto& f : spec.families)
    for (int n : spec.sizes)
      for (auto& a : spec.algos)
        for (int s = 0; s < spec.seeds; ++s)
          cells.push_back({f, n, static_cast<uint64_t>(s), a});

  std::vector<BenchRow> rows(cells.size());
  if (spec.jobs <= 1) {
    for (size_t i = 0; i < cells.size(); ++i)
      rows[i] = run_cell(cells[i].family, cells[i].n, cells[i].seed, cells[i].algo);
  } else {
    std::mutex mu;
    size_t next = 0;
    auto worker = [&] {
      while (true) {
        size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= cells.size()) return;
          i = next++;
        }
        rows[i] = run_cell(cells[i].family, cells[i].n, cells[i].seed, cells[i].algo);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < spec.jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.family, a.n, a.algo, a.seed) < std::tie(b.family, b.n, b.algo, b.seed);
  });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << "\n";
  for (auto& r : rows) {
    out << r.family << ',' << r.n << ',' << r.seed << ',' << r.algo << ',' << r.agents << ',';
    if (r.arrival >= 0) out << r.arrival;
    out << ',' << (r.valid ? "true" : "false") << ',' << std::fixed << std::setprecision(3)
        << r.wall_ms << ',' << r.note << "\n";
  }
}

std::vector<BenchRow> read_bench_csv(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == kBenchCsvHeader) continue;
    }
    std::vector<std::string> f;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        f.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    f.push_back(cur);
    if (f.size() != 9) throw ShapeError("bad csv row: " + line);
    BenchRow r;
    r.family = f[0];
    r.n = std::stoi(f[1]);
    r.seed = std::stoull(f[2]);
    r.algo = f[3];
    r.agents = std::stoi(f[4]);
    r.arrival = f[5].empty() ? -1 : std::stoll(f[5]);
    r.valid = f[6] == "true";
    r.wall_ms = std::stod(f[7]);
    r.note = f[8];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace texplore
