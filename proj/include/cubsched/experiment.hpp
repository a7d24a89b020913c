#pragma once

#include "cubsched/graph.hpp"
#include "cubsched/scheduler.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cubsched {

/// One batch of random instances solved with fixed speeds.  Seeds are
/// seed_base, seed_base+1, ... and each row depends only on its own
/// seed, so results are identical regardless of worker count.
struct ExperimentConfig {
  int n = 0;
  int count = 0;
  std::uint64_t seed_base = 0;
  MachineSpeeds speeds;
  GraphClass graph_class = GraphClass::Bicubic;
  bool with_oracle = false;
  int workers = 0;  // 0 picks a pool size from the hardware
};

/// One result row; empty strings stand for absent values.  A failed
/// instance reports the failure label in `error` and leaves the
/// result columns empty instead of aborting the batch.
struct ExperimentRow {
  std::uint64_t seed = 0;
  int n = 0;
  int greedy_set_size = 0;
  std::string route;
  std::string alg_makespan;
  std::string oracle_makespan;
  std::string ratio;
  std::string error;
};

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

/// Serializes rows under the fixed header
/// `seed,n,greedy_set_size,route,alg_makespan,oracle_makespan,ratio,error`.
std::string to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace cubsched
