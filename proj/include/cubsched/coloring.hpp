#pragma once

#include "cubsched/graph.hpp"

#include <array>
#include <vector>

namespace cubsched {

/// Vertices of an independent set, sorted ascending.
using IndependentSet = std::vector<int>;

/// A proper partition of (a subset of) the host's vertices into at most
/// 3 independent classes.  class_of[v] is the class index, or -1 when v
/// is outside the colored subset (used for residual-graph colorings
/// mapped back into the host).
struct Coloring {
  std::vector<int> class_of;
  int classes = 3;

  std::array<int, 3> sizes() const {
    std::array<int, 3> result{0, 0, 0};
    for (int c : class_of)
      if (c >= 0) ++result[c];
    return result;
  }

  /// Largest class size minus smallest, over the declared class count.
  int width() const {
    auto sz = sizes();
    int lo = sz[0], hi = sz[0];
    for (int c = 1; c < classes; ++c) {
      lo = std::min(lo, sz[c]);
      hi = std::max(hi, sz[c]);
    }
    return hi - lo;
  }
};

/// Checks that no edge of g joins two vertices of the same class and
/// all class indices are in range.
bool is_proper(const CubicGraph& g, const Coloring& col);

/// Class sizes in decreasing order: a >= b >= c >= 0.
struct SizeTriple {
  int a = 0, b = 0, c = 0;
  int sum() const { return a + b + c; }
  bool operator==(const SizeTriple&) const = default;
};

SizeTriple make_size_triple(int x, int y, int z);

/// Maximal independent set: repeatedly take a minimum-degree vertex of
/// the shrinking graph (ties by smallest index) and delete its closed
/// neighborhood.
IndependentSet greedy_independent_set(const CubicGraph& g);

/// Proper coloring with at most 3 classes of any connected cubic graph
/// except K4 (is_k4 error).  Degree-3 graphs are 3-colorable by
/// Brooks' theorem; the construction picks a suitable ordering and
/// colors greedily.
Coloring brooks_three_coloring(const CubicGraph& g);

/// One width-reduction step: moves one vertex of surplus from the
/// largest class to the smallest (directly, by a Kempe-chain exchange,
/// or by relaying through the middle class).  The middle class size is
/// preserved.  Errors: already_minimal_width (width <= 1),
/// excluded_graph (K4 or K33).
Coloring decrease_width_by_one(const CubicGraph& g, const Coloring& col);

/// Drives the class sizes to exactly (target.a, target.b, target.c).
/// On bipartite hosts the start is (or is rebuilt as) one full side
/// plus a split of the other side, and only the two outer classes
/// trade vertices; on 3-chromatic hosts classes are rank-matched to
/// the target and surplus moves from the most oversized to the most
/// undersized class.  Output classes are relabeled in decreasing size
/// order.  Errors: excluded_graph, target_unreachable.
Coloring modified_clw(const CubicGraph& g, const Coloring& start, SizeTriple target);

/// Iterates decrease_width_by_one until the width is at most 1.
Coloring equitable_clw(const CubicGraph& g, const Coloring& start);

/// Finds an independent set of the same size as i whose removal leaves
/// a bipartite graph; returns i itself when g - i is already
/// bipartite.  Local search over single swaps scored by the number of
/// odd components, with deterministic perturbation restarts and an
/// exhaustive fallback for order <= 24.  Errors:
/// precondition_too_small (|i| < 0.4 n), search_exhausted.
IndependentSet bipartize(const CubicGraph& g, const IndependentSet& i);

/// Mutable sparse graph for residuals (bounded degree, possibly
/// disconnected, possibly with isolated vertices).
struct SimpleGraph {
  explicit SimpleGraph(int n) : adj(n) {}
  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int order() const { return static_cast<int>(adj.size()); }
  std::vector<std::vector<int>> adj;
};

/// g minus an independent set, relabeled to consecutive indices;
/// to_original maps residual index -> host index.  When the removed
/// set has size exactly 0.4 n, the residual degree counts must satisfy
/// d0 = d2 + 2 d3; this is asserted as a structural self-check.
struct ResidualGraph {
  SimpleGraph graph;
  std::vector<int> to_original;
};
ResidualGraph residual(const CubicGraph& g, const IndependentSet& removed);

/// Proper 2-coloring with class sizes differing by at most 1.
/// Components are colored by depth-first traversal and oriented to
/// shrink the running imbalance; isolated vertices go to the smaller
/// class.  Error: not_bipartite.
Coloring equitable_two_coloring(const SimpleGraph& h);

}  // namespace cubsched
