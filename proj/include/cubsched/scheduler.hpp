#pragma once

#include "cubsched/coloring.hpp"
#include "cubsched/graph.hpp"
#include "cubsched/rational.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace cubsched {

/// Speeds of the three uniform machines, s1 >= s2 >= s3 > 0, exact.
struct MachineSpeeds {
  Rational s1, s2, s3;

  /// Validating constructor helper; throws malformed_input when the
  /// ordering or positivity constraint fails.
  static MachineSpeeds make(Rational s1, Rational s2, Rational s3);

  /// Parses "S1,S2,S3" where each entry is "p" or "p/q".
  static MachineSpeeds from_text(std::string_view text);

  Rational sum() const { return s1 + s2 + s3; }
  Rational speed(int machine) const { return machine == 0 ? s1 : machine == 1 ? s2 : s3; }
};

/// Assignment of every job to one of the three machines.  loads[i] is
/// the sorted job list of machine i+1; machines are ordered fastest
/// first, matching MachineSpeeds.
struct Schedule {
  std::array<std::vector<int>, 3> loads;
  Rational makespan;
  std::string route;
};

/// max over machines of |load| / speed, exact.
Rational makespan(const std::array<std::vector<int>, 3>& loads, const MachineSpeeds& speeds);

/// Per-machine job-count targets: exact ideal loads n * s_i / s, the
/// integer rounding candidates derived from them, and the decided
/// counts.  In the fast-machine regime (s1 >= s2 + s3) the counts are
/// forced directly and no candidates are emitted.
struct LoadTargets {
  int n = 0;
  std::array<Rational, 3> ideal;
  std::vector<std::array<int, 3>> rounded_candidates;
  std::array<int, 3> chosen{0, 0, 0};
  bool fast_regime = false;
  int n_star = 0;
};

LoadTargets ideal_loads(int n, const MachineSpeeds& speeds);

enum class RoundMode { Bicubic, Tricubic };

/// Integer candidate triples around the ideal loads, each summing to
/// n and sorted decreasing.  Bicubic mode emits four rounding
/// variants and filters triples whose largest entry exceeds n/2 (not
/// realizable as an independent set on a bipartite host); tricubic
/// mode emits the floor/ceiling pair around n1.  Duplicates removed,
/// emission order preserved.  Error: no_feasible_candidate.
std::vector<std::array<int, 3>> round_candidates(const LoadTargets& targets, RoundMode mode);

/// Optimal schedule for a connected bipartite cubic graph other than
/// K33 (order >= 8).  Errors: not_bicubic, excluded_graph (K33),
/// unsupported_structure (disconnected).
Schedule schedule_bicubic(const CubicGraph& g, const MachineSpeeds& speeds);

/// Closed-form optimum for K33: the better of the (3,2,1) and (3,3,0)
/// decompositions, makespan min{max{3/s1, 2/s2, 1/s3}, 3/s2}.
Schedule schedule_k33(const CubicGraph& g, const MachineSpeeds& speeds);

/// The prism has a unique decomposition into 3 independent sets, all
/// of size 2; makespan 2/s3.
Schedule schedule_prism(const CubicGraph& g, const MachineSpeeds& speeds);

/// 4/3-approximation for a connected 3-chromatic cubic graph other
/// than the prism (order >= 8), for speeds s1 > s2 = s3.  Errors:
/// not_tricubic, excluded_graph (prism), unsupported_speeds,
/// unsupported_structure (disconnected).
Schedule schedule_tricubic(const CubicGraph& g, const MachineSpeeds& speeds);

/// Disconnected bipartite inputs: global targets as if connected,
/// then per-component size triples chosen greedily to keep running
/// prefix ratios close to the global proportions.  Errors:
/// component_excluded (K33 component), not_bicubic.
Schedule schedule_disconnected_bicubic(const CubicGraph& g, const MachineSpeeds& speeds);

/// Dispatcher: routes by classification and component structure, with
/// an equitable-coloring shortcut when all speeds are equal.  Errors:
/// infeasible (K4 component), unsupported_speeds (tricubic with
/// s2 != s3), unsupported_structure (disconnected non-bipartite).
Schedule schedule(const CubicGraph& g, const MachineSpeeds& speeds);

/// Text form used by the CLI:
///   route <route>
///   makespan <fraction>
///   machine <k> speed <fraction> load <count> jobs <1-based ids...>
std::string format_schedule(const Schedule& sched, const MachineSpeeds& speeds);

}  // namespace cubsched
