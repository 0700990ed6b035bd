#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "swapgame/dynamics.hpp"
#include "swapgame/instances.hpp"
#include "swapgame/io.hpp"
#include "swapgame/oracle.hpp"

namespace swapgame::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InstanceSpec {
  std::string file;
  std::string generator;
  int n = 0, p = 0, q = 0, m = 0, edges = -1, extra = 0;
  std::uint64_t seed = 0;
  std::vector<int> order;
};

struct ModelSpec {
  std::string attitude = "pess";
  std::string cost = "sum";
  int k = 3;
};

void add_generator_params(CLI::App* app, InstanceSpec& s) {
  app->add_option("--n", s.n, "Vertex count (star, path, random-tree, random-connected)");
  app->add_option("--p", s.p, "Spine length (ts, ts-prime)");
  app->add_option("--q", s.q, "Spine length (caterpillar)");
  app->add_option("--m", s.m, "Leaves on the smaller hub (seesaw)");
  app->add_option("--edges", s.edges, "Edge count (random-connected)");
  app->add_option("--extra", s.extra, "Padding leaves on inner gadgets (ts, ts-prime)");
  app->add_option("--order", s.order, "Vertex order (labeled-path)")->delimiter(',');
  app->add_option("--seed", s.seed, "Seed for random generators and schedulers");
}

void add_instance_options(CLI::App* app, InstanceSpec& s) {
  auto* file = app->add_option("--instance", s.file, "Edge-list file");
  auto* gen = app->add_option("--generator", s.generator, "Generator name");
  file->excludes(gen);
  add_generator_params(app, s);
}

void add_model_options(CLI::App* app, ModelSpec& s) {
  app->add_option("--attitude", s.attitude, "pess | weak | opt")->check(CLI::IsMember({"pess", "weak", "opt"}));
  app->add_option("--cost", s.cost, "sum | max")->check(CLI::IsMember({"sum", "max"}));
  app->add_option("--k", s.k, "View radius")->check(CLI::PositiveNumber);
}

Graph generate(const InstanceSpec& s) {
  const std::string& g = s.generator;
  if (g == "star") return gen_star(s.n);
  if (g == "path") return gen_path(s.n);
  if (g == "labeled-path") return gen_labeled_path(s.order);
  if (g == "random-tree") return gen_random_tree(s.n, s.seed);
  if (g == "random-connected") return gen_random_connected(s.n, s.edges, s.seed);
  if (g == "ts") return gen_ts(s.p, s.extra);
  if (g == "ts-prime") return gen_ts_prime(s.p, s.extra);
  if (g == "caterpillar") return gen_caterpillar(s.q);
  if (g == "seesaw") return gen_seesaw(s.m);
  throw UsageError("unknown generator '" + g + "'");
}

Graph load_instance(const InstanceSpec& s) {
  if (!s.file.empty()) return read_edge_list_file(s.file);
  if (s.generator.empty()) throw UsageError("one of --instance or --generator is required");
  return generate(s);
}

PlayerModel to_model(const ModelSpec& s) {
  PlayerModel m;
  m.attitude = s.attitude == "pess" ? Attitude::Pessimistic
               : s.attitude == "weak" ? Attitude::WeaklyPessimistic
                                      : Attitude::Optimistic;
  m.kind = s.cost == "sum" ? CostKind::Sum : CostKind::Max;
  m.k = s.k;
  return m;
}

Scheduler to_scheduler(const std::string& spec, int n, std::uint64_t seed) {
  if (spec == "rr") return Scheduler::round_robin(n);
  if (spec == "random") return Scheduler::random(seed);
  if (spec == "simul") return Scheduler::simultaneous();
  if (spec.rfind("fixed:", 0) == 0) {
    int id = -1;
    try {
      id = std::stoi(spec.substr(6));
    } catch (const std::exception&) {
      throw UsageError("bad fixed scheduler '" + spec + "'");
    }
    if (id < 0 || id >= n) throw UsageError("fixed player out of range");
    return Scheduler::fixed(id);
  }
  throw UsageError("unknown scheduler '" + spec + "'");
}

template <class Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  fn(f);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected N or A..B");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Swap games with k-local views"};
  app.require_subcommand(1);

  InstanceSpec gen_spec;
  std::string gen_out, gen_dot;
  auto* generate_cmd = app.add_subcommand("generate", "Write an instance as an edge list");
  generate_cmd->add_option("name", gen_spec.generator, "star | path | labeled-path | random-tree | random-connected | "
                                                       "ts | ts-prime | caterpillar | seesaw")
      ->required();
  add_generator_params(generate_cmd, gen_spec);
  generate_cmd->add_option("--out", gen_out, "Edge-list output path (default stdout)");
  generate_cmd->add_option("--dot", gen_dot, "DOT output path");

  InstanceSpec sim_inst;
  ModelSpec sim_model;
  std::string scheduler = "rr", trace_path, sim_dot;
  long long max_steps = -1;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run best-response dynamics");
  add_instance_options(simulate_cmd, sim_inst);
  add_model_options(simulate_cmd, sim_model);
  simulate_cmd->add_option("--scheduler", scheduler, "rr | random | fixed:<id> | simul");
  simulate_cmd->add_option("--max-steps", max_steps, "Step budget (default 4n^3)");
  simulate_cmd->add_option("--trace", trace_path, "Trace output (JSON lines)");
  simulate_cmd->add_option("--dot", sim_dot, "DOT of the final state");

  InstanceSpec check_inst;
  ModelSpec check_model;
  auto* check_cmd = app.add_subcommand("check", "Equilibrium verdict with unhappy witnesses");
  add_instance_options(check_cmd, check_inst);
  add_model_options(check_cmd, check_model);

  ModelSpec scan_model;
  std::string n_range = "6..8", mode = "exhaustive", scan_csv;
  int samples = 1000, threads = 1;
  std::uint64_t scan_seed = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Price-of-Anarchy scan over trees");
  scan_cmd->add_option("--n", n_range, "Vertex count N or range A..B");
  add_model_options(scan_cmd, scan_model);
  scan_cmd->add_option("--mode", mode, "exhaustive | sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  scan_cmd->add_option("--samples", samples, "Trees per n in sample mode");
  scan_cmd->add_option("--seed", scan_seed, "Sampling seed");
  scan_cmd->add_option("--threads", threads, "Worker threads");
  scan_cmd->add_option("--csv", scan_csv, "CSV output path (default stdout)");

  int cases = 300;
  std::uint64_t oracle_seed = 1;
  bool bridges = false;
  std::string oracle_csv;
  auto* oracle_cmd = app.add_subcommand("oracle-validate", "Compare closed-form deltas with brute force");
  oracle_cmd->add_option("--cases", cases, "Number of random cases");
  oracle_cmd->add_option("--seed", oracle_seed, "Case seed");
  oracle_cmd->add_flag("--bridges", bridges, "Also try hidden vertices joining two frontier members");
  oracle_cmd->add_option("--csv", oracle_csv, "CSV output path (default stdout)");

  std::vector<std::string> argv_store{"swapgame"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*generate_cmd) {
      Graph g = generate(gen_spec);
      with_output(gen_out, out, [&](std::ostream& os) { write_edge_list(os, g); });
      if (!gen_dot.empty()) with_output(gen_dot, out, [&](std::ostream& os) { write_dot(os, g); });
      return 0;
    }

    if (*simulate_cmd) {
      Graph g0 = load_instance(sim_inst);
      if (!is_connected(g0)) throw UsageError("instance is disconnected");
      PlayerModel m = to_model(sim_model);
      Scheduler sch = to_scheduler(scheduler, g0.n(), sim_inst.seed);
      std::size_t budget = max_steps > 0 ? static_cast<std::size_t>(max_steps) : default_max_steps(g0.n());
      RunResult r = run(g0, m, sch, budget);
      if (!trace_path.empty()) with_output(trace_path, out, [&](std::ostream& os) { write_trace(os, r.trace); });
      if (!sim_dot.empty()) {
        std::optional<DotHighlight> hl;
        if (!r.trace.empty() && !r.trace.back().moves.empty()) {
          const auto& mv = r.trace.back().moves.back();
          hl = DotHighlight{Edge(mv.mover, mv.removed), Edge(mv.mover, mv.added)};
        }
        with_output(sim_dot, out, [&](std::ostream& os) { write_dot(os, r.outcome.final_graph, hl); });
      }
      out << r.outcome.summary() << '\n';
      return 0;
    }

    if (*check_cmd) {
      Graph g = load_instance(check_inst);
      if (!is_connected(g)) throw UsageError("instance is disconnected");
      EquilibriumCheck c = is_equilibrium(g, to_model(check_model));
      if (c.equilibrium) {
        out << "equilibrium\n";
        return 0;
      }
      out << "not-equilibrium unhappy=" << c.unhappy.size() << '\n';
      for (std::size_t i = 0; i < c.unhappy.size(); ++i)
        out << "unhappy " << c.unhappy[i] << " swap " << c.witnesses[i].removed << ' ' << c.witnesses[i].added << '\n';
      return 1;
    }

    if (*scan_cmd) {
      auto [lo, hi] = parse_range(n_range);
      if (lo < 2 || hi < lo) throw UsageError("bad n range");
      if (mode == "exhaustive" && hi > 9) throw UsageError("exhaustive scan supports n <= 9");
      ScanMode sm{mode == "exhaustive", samples, scan_seed};
      PlayerModel m = to_model(scan_model);
      with_output(scan_csv, out, [&](std::ostream& os) {
        write_poa_csv_header(os);
        for (int n = lo; n <= hi; ++n) write_poa_csv_row(os, poa_scan(n, m, sm, threads));
      });
      return 0;
    }

    if (*oracle_cmd) {
      if (cases < 1) throw UsageError("--cases must be positive");
      std::vector<OracleRow> rows;
      for (const auto& c : generate_oracle_cases(cases, oracle_seed)) rows.push_back(validate_case(c, bridges));
      with_output(oracle_csv, out, [&](std::ostream& os) { write_oracle_csv(os, rows); });
      std::size_t agree = std::count_if(rows.begin(), rows.end(), [](const OracleRow& r) { return r.agree; });
      if (!oracle_csv.empty()) out << "agree " << agree << '/' << rows.size() << '\n';
      return agree == rows.size() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace swapgame::cli
