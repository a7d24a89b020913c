#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubsched {

/// A finite simple undirected graph in which every vertex has degree
/// exactly 3.  Vertices are 0-based.  Instances are immutable after
/// construction and always satisfy: order is even and at least 4,
/// adjacency is symmetric and loop-free, per-vertex neighbor lists are
/// sorted ascending.
class CubicGraph {
public:
  /// Validates and builds.  Throws SolverError with invalid_order,
  /// odd_order, not_simple or not_cubic.
  static CubicGraph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return order() * 3 / 2; }

  const std::array<int, 3>& neighbors(int v) const { return adjacency_[v]; }

  bool adjacent(int u, int v) const {
    const auto& row = adjacency_[u];
    return row[0] == v || row[1] == v || row[2] == v;
  }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

private:
  CubicGraph() = default;
  std::vector<std::array<int, 3>> adjacency_;
};

enum class GraphClass {
  Bicubic,        // bipartite
  Tricubic,       // chromatic number 3
  FourChromatic,  // contains a K4 component
};

std::string_view graph_class_name(GraphClass cls);

struct ChromaticClass {
  GraphClass kind;
  int components;
};

/// Chromatic classification plus component count.  Bipartiteness is
/// decided by breadth-first 2-coloring; a component on 4 vertices is
/// necessarily K4, and any other non-bipartite cubic component is
/// 3-chromatic.
ChromaticClass classify(const CubicGraph& g);

/// Sides of a 2-coloring, both sorted ascending.  In each component the
/// side containing the component's smallest vertex goes first, so the
/// result is deterministic.  nullopt when not bipartite.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const CubicGraph& g);

/// One connected component, relabeled to 0..k-1 preserving relative
/// vertex order; to_original maps new index -> index in the host graph.
struct Component {
  CubicGraph graph;
  std::vector<int> to_original;
};

/// Connected components ordered by smallest original vertex.  Each
/// component of a cubic graph is itself cubic.
std::vector<Component> components(const CubicGraph& g);

/// Text format:
///   c <comment>            ignored, as are blank lines
///   p cub <n> <m>          exactly once, before any edge
///   e <u> <v>              1-based, u < v, exactly m of them
CubicGraph parse_graph(std::string_view text);

/// Inverse of parse_graph; output is bit-exact reproducible (edges
/// sorted lexicographically, no comments).
std::string format_graph(const CubicGraph& g);

/// Random connected cubic graph via repeated stub pairing with
/// rejection (loops, parallel edges, disconnection, class mismatch
/// all cause a resample).  Deterministic for a fixed
/// (order, seed, class_filter).  Requires order even and >= 6, else
/// invalid_order; throws generation_exhausted after 10000 rejected
/// pairings.  With a Bicubic filter the pairing is restricted to two
/// fixed sides of order/2 vertices; with Tricubic, bipartite outcomes
/// are rejected.
CubicGraph random_cubic(int order, std::uint64_t seed,
                        std::optional<GraphClass> class_filter = std::nullopt);

namespace graphs {
CubicGraph k4();
CubicGraph k33();
CubicGraph prism();
CubicGraph cube();
CubicGraph petersen();
}  // namespace graphs

}  // namespace cubsched
