// Command line front end: instance generation, exploration, validation,
// the exact oracle, reductions, the benchmark harness, growth fits, and
// schedule traces.
//
// Exit codes: 0 success, 1 validation failure, 2 bad input, 3 lifetime
// exhausted.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "texplore/bench.hpp"
#include "texplore/explorers.hpp"
#include "texplore/fit.hpp"
#include "texplore/json_io.hpp"
#include "texplore/oracle.hpp"
#include "texplore/reductions.hpp"
#include "texplore/report.hpp"

namespace tx = texplore;

namespace {

struct Params {
  std::map<std::string, std::string> kv;

  bool has(const std::string& k) const { return kv.count(k) > 0; }

  long long get_int(const std::string& k, long long fallback) const {
    auto it = kv.find(k);
    if (it == kv.end()) return fallback;
    return std::stoll(it->second);
  }

  long long require_int(const std::string& k) const {
    auto it = kv.find(k);
    if (it == kv.end()) throw tx::ShapeError("missing required --param " + k + "=<int>");
    return std::stoll(it->second);
  }

  double get_double(const std::string& k, double fallback) const {
    auto it = kv.find(k);
    if (it == kv.end()) return fallback;
    return std::stod(it->second);
  }

  std::string get_str(const std::string& k, const std::string& fallback) const {
    auto it = kv.find(k);
    return it == kv.end() ? fallback : it->second;
  }
};

Params parse_params(const std::vector<std::string>& raw) {
  Params p;
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw tx::ShapeError("bad --param '" + item + "', expected key=value");
    p.kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return p;
}

void emit_json(const tx::Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << tx::dump_json(j);
  else
    tx::write_json_file(out_path, j);
}

// Shapes accepted where a static underlying graph is named: "<kind>:<size>".
std::vector<tx::Edge> parse_underlying(const std::string& spec, int& n_out) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw tx::ShapeError("underlying must be <shape>:<n>");
  std::string kind = spec.substr(0, colon);
  int n = std::stoi(spec.substr(colon + 1));
  n_out = n;
  if (kind == "cycle") return tx::cycle_graph(n);
  if (kind == "path") return tx::path_graph(n);
  if (kind == "star") return tx::star_graph(n);
  if (kind == "complete") return tx::complete_graph(n);
  if (kind == "grid") {
    n_out = 2 * n;
    return tx::grid_2xn(n);
  }
  if (kind == "chord") return tx::cycle_with_chord(n, 0, n / 2);
  throw tx::ShapeError("unknown underlying shape: " + kind);
}

int cmd_gen(const std::string& family, const Params& p, uint64_t seed,
            const std::string& out_path) {
  tx::Step lifetime = p.get_int("lifetime", -1);
  if (family == "rotating-star") {
    emit_json(tx::instance_to_json(tx::rotating_star(
                  static_cast<int>(p.require_int("n")), lifetime)),
              out_path);
  } else if (family == "chained-stars") {
    emit_json(tx::instance_to_json(tx::chained_stars(static_cast<int>(p.require_int("d")),
                                                     static_cast<int>(p.require_int("n")),
                                                     lifetime)),
              out_path);
  } else if (family == "planar-rounds") {
    emit_json(tx::instance_to_json(
                  tx::planar_rounds(static_cast<int>(p.require_int("n")), lifetime)),
              out_path);
  } else if (family == "cycle-2n3") {
    emit_json(
        tx::instance_to_json(tx::cycle_2n3(static_cast<int>(p.require_int("n")), lifetime)),
        out_path);
  } else if (family == "gadget") {
    tx::GadgetSpec spec;
    int np = 0;
    spec.base_edges = parse_underlying(p.get_str("gprime", "path:4"), np);
    spec.n_prime = np;
    spec.s = 0;
    spec.t = np - 1;
    spec.c = static_cast<int>(p.get_int("c", 1));
    std::optional<std::vector<tx::Vertex>> ham;
    std::string kind = p.get_str("gprime", "path:4").substr(0, p.get_str("gprime", "path:4").find(':'));
    if (kind == "path" || kind == "complete" || kind == "cycle") {
      std::vector<tx::Vertex> order(np);
      for (int i = 0; i < np; ++i) order[i] = i;
      ham = order;
    }
    tx::GadgetResult res = tx::hardness_gadget(spec, ham, lifetime);
    emit_json(tx::instance_to_json(res.instance), out_path);
    std::string wout = p.get_str("witness_out", "");
    if (!wout.empty() && res.witness)
      tx::write_json_file(wout, tx::schedule_to_json(*res.witness));
  } else if (family == "random") {
    int n = 0;
    auto underlying = parse_underlying(p.get_str("underlying", "cycle:8"), n);
    tx::Step life = lifetime >= 0 ? lifetime : static_cast<tx::Step>(n) * n;
    emit_json(tx::instance_to_json(tx::random_realization(
                  n, underlying, life, p.get_double("density", 0.5), seed,
                  p.get_int("period", 1), static_cast<tx::Vertex>(p.get_int("start", 0)))),
              out_path);
  } else if (family == "regular") {
    int n = static_cast<int>(p.require_int("n"));
    tx::RegularFamily fam = tx::regular_family_graph(n, seed ^ 0x5eedULL);
    emit_json(tx::instance_to_json(tx::regular_instance(n, fam.edges, fam.profile, seed,
                                                        lifetime)),
              out_path);
  } else {
    throw tx::ShapeError("unknown family: " + family);
  }
  return 0;
}

int cmd_explore(const std::string& algo, const std::string& in_path, const std::string& td_path,
                const std::string& out_path) {
  tx::Instance inst = tx::instance_from_json(tx::read_json_file(in_path));
  tx::MultiAgentSchedule sched;
  if (algo == "greedy") {
    sched.agents = {tx::explore_greedy(inst)};
  } else if (algo == "cycle3n") {
    sched.agents = {tx::explore_cycle_3n(inst)};
  } else if (algo == "cycle-opt") {
    auto res = tx::cycle_optimal(inst);
    if (!res.complete)
      throw tx::LifetimeExhausted("no cycle schedule completed within the lifetime");
    sched.agents = {res.walk};
  } else if (algo == "chord") {
    sched.agents = {tx::explore_chord(inst)};
  } else if (algo == "grid") {
    sched = tx::explore_grid_multi(inst);
  } else if (algo == "treewidth") {
    tx::TreeDecomposition td;
    if (!td_path.empty())
      td = tx::td_from_json(tx::read_json_file(td_path));
    else
      td = tx::min_fill_decomposition(inst.graph.n(), inst.graph.edges());
    sched.agents = {tx::explore_treewidth(inst, td)};
  } else if (algo == "regular") {
    sched.agents = {tx::explore_regular_mst(inst, std::nullopt).walk};
  } else {
    throw tx::ShapeError("unknown algorithm: " + algo);
  }

  tx::ScheduleCheck check = tx::validate_schedule(inst, sched);
  if (!out_path.empty()) tx::write_json_file(out_path, tx::schedule_to_json(sched));
  std::cout << "algo=" << algo << " agents=" << sched.agents.size()
            << " arrival=" << (check.coverage ? std::to_string(check.arrival) : "-")
            << " valid=" << (check.ok && check.coverage ? "true" : "false") << "\n";
  return check.ok && check.coverage ? 0 : 1;
}

int cmd_validate(const std::string& in_path, const std::string& sched_path) {
  tx::Instance inst = tx::instance_from_json(tx::read_json_file(in_path));
  tx::MultiAgentSchedule sched = tx::schedule_from_json(tx::read_json_file(sched_path));
  tx::ScheduleCheck check = tx::validate_schedule(inst, sched);
  if (!check.ok) {
    for (auto& [agent, viol] : check.violations)
      std::cout << "agent " << agent << " move " << viol.move_index << ": " << viol.reason
                << "\n";
    return 1;
  }
  std::cout << "coverage=" << (check.coverage ? "true" : "false") << " visited="
            << check.visited_count << "/" << inst.graph.n();
  if (check.coverage) std::cout << " arrival=" << check.arrival;
  std::cout << "\n";
  return check.coverage ? 0 : 1;
}

int cmd_oracle(const std::string& in_path, int limit, const std::string& out_path) {
  tx::Instance inst = tx::instance_from_json(tx::read_json_file(in_path));
  tx::OracleResult res = tx::exact_optimum(inst, limit);
  tx::Json j;
  j["optimum"] = res.optimum;
  j["walk"] = tx::walk_to_json(res.witness);
  emit_json(j, out_path);
  return 0;
}

int cmd_reduce(const std::string& in_path, const std::string& multi_path,
               const std::string& algo, const std::string& out_path) {
  tx::Instance inst = tx::instance_from_json(tx::read_json_file(in_path));
  tx::TemporalWalk walk;
  tx::CompressTrace trace;
  if (!multi_path.empty()) {
    // A schedule file fixes only one phase; later phases replay its move
    // pattern shifted in time and are revalidated before use.
    tx::MultiAgentSchedule base = tx::schedule_from_json(tx::read_json_file(multi_path));
    if (base.agents.empty()) throw tx::ShapeError("empty schedule");
    tx::Step span = 0;
    for (auto& w : base.agents) span = std::max(span, w.end_time());
    auto builder = [&](tx::Step start) {
      tx::MultiAgentSchedule shifted = base;
      for (auto& w : shifted.agents) {
        w.start_time = start;
        for (auto& m : w.moves) m.step += start;
        tx::WalkCheck wc = tx::check_walk(inst.graph, w);
        if (!wc.ok)
          throw tx::ShapeError(
              "schedule is not phase-repeatable at step " + std::to_string(start) + ": " +
              wc.violation->reason + "; use --algo grid for a rebuilding phase source");
      }
      return shifted;
    };
    walk = tx::multi_to_single(inst, static_cast<int>(base.agents.size()), builder, &trace);
  } else if (algo == "grid") {
    tx::GridStats stats;
    auto probe = tx::explore_grid_multi(inst, &stats);
    auto builder = [&](tx::Step start) { return tx::explore_grid_multi_from(inst, start); };
    walk = tx::multi_to_single(inst, stats.agents, builder, &trace);
  } else {
    throw tx::ShapeError("reduce needs --multi <sched.json> or --algo grid");
  }
  auto audit = tx::progress_per_phase_audit(trace);
  tx::MultiAgentSchedule sched{{walk}};
  if (!out_path.empty()) tx::write_json_file(out_path, tx::schedule_to_json(sched));
  tx::ScheduleCheck check = tx::validate_schedule(inst, sched);
  std::cout << "phases=" << trace.phases.size() << " t=" << trace.t_max << " k=" << trace.k
            << " arrival=" << (check.coverage ? std::to_string(check.arrival) : "-")
            << " audit=" << (audit.ok ? "pass" : "fail")
            << " valid=" << (check.ok && check.coverage ? "true" : "false") << "\n";
  return check.ok && check.coverage && audit.ok ? 0 : 1;
}

int cmd_contract(const std::string& in_path, const std::string& edges_arg,
                 const std::string& out_path, const std::string& map_path) {
  tx::Instance inst = tx::instance_from_json(tx::read_json_file(in_path));
  std::vector<tx::Edge> contractions;
  std::stringstream ss(edges_arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw tx::ShapeError("edges must look like u-v,u-v");
    contractions.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
  }
  tx::ContractionResult res = tx::contract_edges(inst.graph, contractions);
  tx::Instance out{res.graph, res.vertex_map[inst.start]};
  emit_json(tx::instance_to_json(out), out_path);
  if (!map_path.empty()) {
    tx::Json j;
    j["map"] = res.vertex_map;
    tx::write_json_file(map_path, j);
  }
  return 0;
}

int cmd_bench(const tx::BenchSpec& spec, const std::string& out_path) {
  auto rows = tx::run_bench(spec);
  if (out_path.empty()) {
    tx::write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw tx::ShapeError("cannot write " + out_path);
    tx::write_bench_csv(out, rows);
  }
  return 0;
}

int cmd_fit(const std::string& csv_path, const std::string& model, const std::string& family,
            const std::string& algo) {
  std::ifstream in(csv_path);
  if (!in) throw tx::ShapeError("cannot read " + csv_path);
  auto rows = tx::read_bench_csv(in);
  std::vector<std::pair<double, double>> data;
  for (auto& r : rows) {
    if (!r.valid || r.arrival < 0) continue;
    if (!family.empty() && r.family != family) continue;
    if (!algo.empty() && r.algo != algo) continue;
    data.emplace_back(static_cast<double>(r.n), static_cast<double>(r.arrival));
  }
  tx::FitResult res = tx::fit_growth(data, tx::growth_model_from_name(model));
  tx::Json j;
  j["model"] = tx::growth_model_name(res.model);
  j["a"] = res.a;
  if (res.model == tx::GrowthModel::Power) j["p"] = res.p;
  j["residual"] = res.residual;
  j["points"] = res.points;
  std::cout << tx::dump_json(j);
  return 0;
}

int cmd_report(const std::string& in_path, const std::string& sched_path) {
  tx::Instance inst = tx::instance_from_json(tx::read_json_file(in_path));
  tx::MultiAgentSchedule sched = tx::schedule_from_json(tx::read_json_file(sched_path));
  tx::TraceReport rep = tx::render_trace(inst, sched);
  std::cout << rep.text;
  return rep.valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal graph exploration toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string gen_family, gen_out;
  std::vector<std::string> gen_params;
  uint64_t gen_seed = 0;
  gen->add_option("family", gen_family,
                  "rotating-star|chained-stars|planar-rounds|gadget|cycle-2n3|random|regular")
      ->required();
  gen->add_option("--param", gen_params, "family parameter key=value (repeatable)");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("-o,--out", gen_out, "output instance file (default: stdout)");

  // explore
  auto* explore = app.add_subcommand("explore", "run an exploration algorithm");
  std::string ex_algo, ex_in, ex_td, ex_out;
  explore->add_option("--algo", ex_algo, "greedy|cycle3n|cycle-opt|chord|grid|treewidth|regular")
      ->required();
  explore->add_option("-i,--instance", ex_in, "instance file")->required();
  explore->add_option("--decomposition", ex_td, "tree decomposition file (treewidth)");
  explore->add_option("-o,--out", ex_out, "schedule output file");

  // validate
  auto* validate = app.add_subcommand("validate", "validate a schedule");
  std::string va_in, va_sched;
  validate->add_option("-i,--instance", va_in, "instance file")->required();
  validate->add_option("-s,--schedule", va_sched, "schedule file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact foremost exploration (small n)");
  std::string or_in, or_out;
  int or_limit = 15;
  oracle->add_option("-i,--instance", or_in, "instance file")->required();
  oracle->add_option("--limit", or_limit, "max vertex count");
  oracle->add_option("-o,--out", or_out, "output file (default: stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "compress a multi-agent schedule to one agent");
  std::string re_in, re_multi, re_algo, re_out;
  reduce->add_option("-i,--instance", re_in, "instance file")->required();
  reduce->add_option("--multi", re_multi, "multi-agent schedule file (shifted replay)");
  reduce->add_option("--algo", re_algo, "phase source algorithm: grid");
  reduce->add_option("-o,--out", re_out, "single-agent schedule output");

  // contract
  auto* contract = app.add_subcommand("contract", "contract underlying edges");
  std::string co_in, co_edges, co_out, co_map;
  contract->add_option("-i,--instance", co_in, "instance file")->required();
  contract->add_option("--edges", co_edges, "contraction list u-v,u-v,...")->required();
  contract->add_option("-o,--out", co_out, "contracted instance output");
  contract->add_option("--map-out", co_map, "vertex map output");

  // bench
  auto* bench = app.add_subcommand("bench", "run the benchmark grid");
  tx::BenchSpec spec;
  std::string be_out;
  bench->add_option("--families", spec.families, "instance families")->required()->delimiter(',');
  bench->add_option("--sizes", spec.sizes, "sizes")->required()->delimiter(',');
  bench->add_option("--algos", spec.algos, "algorithms")->required()->delimiter(',');
  bench->add_option("--seeds", spec.seeds, "seeds per cell (0..seeds-1)");
  bench->add_option("--jobs", spec.jobs, "worker threads");
  bench->add_option("-o,--out", be_out, "csv output (default: stdout)");

  // fit
  auto* fit = app.add_subcommand("fit", "fit a growth model to bench csv");
  std::string fi_csv, fi_model = "power", fi_family, fi_algo;
  fit->add_option("--csv", fi_csv, "bench csv file")->required();
  fit->add_option("--model", fi_model, "linear|nlogn|power|quadratic");
  fit->add_option("--family", fi_family, "filter by family");
  fit->add_option("--algo", fi_algo, "filter by algorithm");

  // report
  auto* report = app.add_subcommand("report", "human-readable schedule trace");
  std::string rp_in, rp_sched;
  report->add_option("-i,--instance", rp_in, "instance file")->required();
  report->add_option("-s,--schedule", rp_sched, "schedule file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_family, parse_params(gen_params), gen_seed, gen_out);
    if (explore->parsed()) return cmd_explore(ex_algo, ex_in, ex_td, ex_out);
    if (validate->parsed()) return cmd_validate(va_in, va_sched);
    if (oracle->parsed()) return cmd_oracle(or_in, or_limit, or_out);
    if (reduce->parsed()) return cmd_reduce(re_in, re_multi, re_algo, re_out);
    if (contract->parsed()) return cmd_contract(co_in, co_edges, co_out, co_map);
    if (bench->parsed()) return cmd_bench(spec, be_out);
    if (fit->parsed()) return cmd_fit(fi_csv, fi_model, fi_family, fi_algo);
    if (report->parsed()) return cmd_report(rp_in, rp_sched);
  } catch (const tx::LifetimeExhausted& ex) {
    std::cerr << "lifetime exhausted: " << ex.what() << "\n";
    return 3;
  } catch (const tx::ShapeError& ex) {
    std::cerr << "bad input: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "bad input: " << ex.what() << "\n";
    return 2;
  } catch (const std::out_of_range& ex) {
    std::cerr << "bad input: " << ex.what() << "\n";
    return 2;
  } catch (const texplore::ReachabilityError& ex) {
    std::cerr << "reachability precondition failed at step " << ex.step << ": " << ex.what()
              << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
