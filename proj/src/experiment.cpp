#include "cubsched/experiment.hpp"

#include "cubsched/coloring.hpp"
#include "cubsched/error.hpp"
#include "cubsched/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <boost/rational.hpp>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cubsched {

namespace {

ExperimentRow run_one(const ExperimentConfig& config, int index) {
  ExperimentRow row;
  row.seed = config.seed_base + static_cast<std::uint64_t>(index);
  row.n = config.n;
  try {
    CubicGraph g = random_cubic(config.n, row.seed, config.graph_class);
    row.greedy_set_size = static_cast<int>(greedy_independent_set(g).size());
    Schedule sched = schedule(g, config.speeds);
    row.route = sched.route;
    row.alg_makespan = format_rational(sched.makespan);
    if (config.with_oracle && config.n <= OracleBudget{}.max_vertices) {
      Schedule opt = optimal_schedule_exact(g, config.speeds);
      row.oracle_makespan = format_rational(opt.makespan);
      double ratio = boost::rational_cast<double>(sched.makespan / opt.makespan);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", ratio);
      row.ratio = buf;
    }
  } catch (const SolverError& e) {
    row.error = errc_name(e.code());
  } catch (const std::exception&) {
    row.error = "internal";
  }
  return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.count < 1) throw std::invalid_argument("instance count must be positive");

  std::vector<ExperimentRow> rows(config.count);
  int workers = config.workers > 0 ? config.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, 16);
  workers = std::min(workers, config.count);

  std::atomic<int> next{0};
  auto drain = [&]() {
    for (int i = next.fetch_add(1); i < config.count; i = next.fetch_add(1))
      rows[i] = run_one(config, i);
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "seed,n,greedy_set_size,route,alg_makespan,oracle_makespan,ratio,error\n";
  for (const auto& row : rows) {
    out << row.seed << ',' << row.n << ',' << row.greedy_set_size << ',' << row.route << ','
        << row.alg_makespan << ',' << row.oracle_makespan << ',' << row.ratio << ','
        << row.error << "\n";
  }
  return out.str();
}

}  // namespace cubsched
