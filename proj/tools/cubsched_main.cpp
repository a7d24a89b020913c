#include "cubsched/error.hpp"
#include "cubsched/experiment.hpp"
#include "cubsched/graph.hpp"
#include "cubsched/oracle.hpp"
#include "cubsched/scheduler.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace cubsched;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::infeasible:
    case Errc::unsupported_speeds:
    case Errc::unsupported_structure:
    case Errc::component_excluded:
    case Errc::excluded_graph:
      return 2;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

GraphClass class_from_text(const std::string& text) {
  if (text == "bicubic") return GraphClass::Bicubic;
  if (text == "tricubic") return GraphClass::Tricubic;
  throw std::runtime_error("unknown graph class " + text);
}

int run_solve(const std::string& graph_file, const std::string& speeds_text) {
  CubicGraph g = parse_graph(read_file(graph_file));
  MachineSpeeds speeds = MachineSpeeds::from_text(speeds_text);
  Schedule sched = schedule(g, speeds);
  std::cout << format_schedule(sched, speeds);
  return 0;
}

int run_oracle(const std::string& graph_file, const std::string& speeds_text) {
  CubicGraph g = parse_graph(read_file(graph_file));
  MachineSpeeds speeds = MachineSpeeds::from_text(speeds_text);
  Schedule sched = optimal_schedule_exact(g, speeds);
  std::cout << format_schedule(sched, speeds);
  return 0;
}

int run_gen(int n, std::uint64_t seed, const std::string& class_text,
            const std::string& out_file) {
  std::optional<GraphClass> wanted;
  if (!class_text.empty()) wanted = class_from_text(class_text);
  CubicGraph g = random_cubic(n, seed, wanted);
  write_file(out_file, format_graph(g));
  return 0;
}

int run_experiment_cmd(int n, int count, std::uint64_t seed_base, const std::string& speeds_text,
                       const std::string& class_text, bool with_oracle, int jobs,
                       const std::string& out_file) {
  ExperimentConfig config;
  config.n = n;
  config.count = count;
  config.seed_base = seed_base;
  config.speeds = MachineSpeeds::from_text(speeds_text);
  config.graph_class = class_from_text(class_text);
  config.with_oracle = with_oracle;
  config.workers = jobs;
  auto rows = run_experiment(config);
  write_file(out_file, to_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit-job scheduling on three uniform machines under a cubic incompatibility graph"};
  app.require_subcommand(1);

  std::string graph_file, speeds_text, out_file, class_text;
  int n = 0, count = 0, jobs = 0;
  std::uint64_t seed = 0, seed_base = 0;
  bool with_oracle = false;

  auto* solve = app.add_subcommand("solve", "schedule the jobs of a graph file");
  solve->add_option("--graph", graph_file, "graph file")->required();
  solve->add_option("--speeds", speeds_text, "machine speeds S1,S2,S3 (integers or fractions)")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "provably optimal schedule by exhaustive search");
  oracle->add_option("--graph", graph_file, "graph file")->required();
  oracle->add_option("--speeds", speeds_text, "machine speeds S1,S2,S3 (integers or fractions)")
      ->required();

  auto* gen = app.add_subcommand("gen", "sample a random connected cubic graph");
  gen->add_option("--n", n, "number of vertices")->required();
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--class", class_text, "restrict to bicubic or tricubic")
      ->check(CLI::IsMember({"bicubic", "tricubic"}));
  gen->add_option("--out", out_file, "output file")->required();

  auto* experiment = app.add_subcommand("experiment", "batch of random instances, CSV output");
  experiment->add_option("--n", n, "number of vertices")->required();
  experiment->add_option("--count", count, "number of instances")->required();
  experiment->add_option("--seed-base", seed_base, "seed of the first instance")->required();
  experiment->add_option("--speeds", speeds_text, "machine speeds S1,S2,S3")->required();
  experiment->add_option("--class", class_text, "graph class to sample")
      ->check(CLI::IsMember({"bicubic", "tricubic"}))
      ->required();
  experiment->add_flag("--oracle", with_oracle, "also run the exhaustive oracle per instance");
  experiment->add_option("--jobs", jobs, "worker threads (default: hardware)");
  experiment->add_option("--out", out_file, "output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(graph_file, speeds_text);
    if (app.got_subcommand(oracle)) return run_oracle(graph_file, speeds_text);
    if (app.got_subcommand(gen)) return run_gen(n, seed, class_text, out_file);
    return run_experiment_cmd(n, count, seed_base, speeds_text, class_text, with_oracle, jobs,
                              out_file);
  } catch (const cubsched::SolverError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
