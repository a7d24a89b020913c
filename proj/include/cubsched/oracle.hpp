#pragma once

#include "cubsched/coloring.hpp"
#include "cubsched/graph.hpp"
#include "cubsched/scheduler.hpp"

#include <optional>

namespace cubsched {

/// Caps for the exhaustive routines; exceeding either raises
/// budget_exceeded instead of returning a partial answer.
struct OracleBudget {
  int max_vertices = 20;
  long long node_limit = 100'000'000;
};

/// Globally optimal schedule by exhaustive enumeration of proper
/// <= 3-colorings with symmetry and size-dominance pruning.  For each
/// size profile, classes map to machines in decreasing size order
/// (optimal for uniform machines by an exchange argument).  Errors:
/// infeasible (K4 component), budget_exceeded.
Schedule optimal_schedule_exact(const CubicGraph& g, const MachineSpeeds& speeds,
                                const OracleBudget& budget = {});

/// Exact independence number by branch and bound on a minimum-degree
/// vertex.  Error: budget_exceeded.
int independence_number(const CubicGraph& g, const OracleBudget& budget = {});

/// Whether g has any proper 3-coloring.  Error: budget_exceeded.
bool three_colorable(const CubicGraph& g, const OracleBudget& budget = {});

struct SemiEquitableResult {
  bool exists = false;
  std::optional<Coloring> witness;
};

/// Decides whether g admits a proper 3-coloring with class sizes
/// exactly (a, b, c): enumerate independent a-sets, then check that
/// the residual is bipartite and its component sides can be combined
/// (subset-sum) into classes of sizes b and c.  A returned witness is
/// always re-verified.  Errors: size_mismatch, budget_exceeded.
SemiEquitableResult exists_semi_equitable(const CubicGraph& g, SizeTriple sizes,
                                          const OracleBudget& budget = {});

/// True iff the loads partition all vertices, every load is
/// independent in g, and the recorded makespan matches recomputation.
bool verify_schedule(const CubicGraph& g, const MachineSpeeds& speeds, const Schedule& sched);

}  // namespace cubsched
