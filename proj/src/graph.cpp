#include "cubsched/graph.hpp"

#include "cubsched/error.hpp"
#include "cubsched/rng.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <string>

namespace cubsched {

CubicGraph CubicGraph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  if (order < 4) fail(Errc::invalid_order, "order must be at least 4, got " + std::to_string(order));
  if (order % 2 != 0) fail(Errc::odd_order, "order must be even, got " + std::to_string(order));

  std::vector<std::vector<int>> adj(order);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      fail(Errc::malformed_input, "edge endpoint out of range");
    if (u == v) fail(Errc::not_simple, "self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  CubicGraph g;
  g.adjacency_.resize(order);
  for (int v = 0; v < order; ++v) {
    auto& row = adj[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      fail(Errc::not_simple, "parallel edge at vertex " + std::to_string(v));
    if (row.size() != 3)
      fail(Errc::not_cubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(row.size()));
    g.adjacency_[v] = {row[0], row[1], row[2]};
  }
  return g;
}

std::vector<std::pair<int, int>> CubicGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edge_count());
  for (int u = 0; u < order(); ++u)
    for (int v : adjacency_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

namespace {

// Per-component BFS 2-coloring; returns side index per vertex, or
// absent if some component has an odd cycle.
std::optional<std::vector<int>> two_color(const CubicGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<std::vector<int>> component_vertex_sets(const CubicGraph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<int>> sets;
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> verts;
    std::queue<int> frontier;
    seen[root] = 1;
    frontier.push(root);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      verts.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          frontier.push(v);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    sets.push_back(std::move(verts));
  }
  return sets;
}

}  // namespace

std::string_view graph_class_name(GraphClass cls) {
  switch (cls) {
    case GraphClass::Bicubic: return "bicubic";
    case GraphClass::Tricubic: return "tricubic";
    case GraphClass::FourChromatic: return "four-chromatic";
  }
  return "unknown";
}

ChromaticClass classify(const CubicGraph& g) {
  auto sets = component_vertex_sets(g);
  // a cubic component on 4 vertices has all 3 possible neighbors present,
  // so it is K4
  bool has_k4 = std::any_of(sets.begin(), sets.end(),
                            [](const auto& s) { return s.size() == 4; });
  if (has_k4) return {GraphClass::FourChromatic, static_cast<int>(sets.size())};
  bool bipartite = two_color(g).has_value();
  return {bipartite ? GraphClass::Bicubic : GraphClass::Tricubic,
          static_cast<int>(sets.size())};
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const CubicGraph& g) {
  auto side = two_color(g);
  if (!side) return std::nullopt;
  std::vector<int> left, right;
  for (int v = 0; v < g.order(); ++v)
    ((*side)[v] == 0 ? left : right).push_back(v);
  return std::make_pair(std::move(left), std::move(right));
}

std::vector<Component> components(const CubicGraph& g) {
  std::vector<Component> result;
  for (auto& verts : component_vertex_sets(g)) {
    std::vector<int> to_new(g.order(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
      for (int v : g.neighbors(u))
        if (u < v) edges.emplace_back(to_new[u], to_new[v]);
    result.push_back({CubicGraph::from_edges(static_cast<int>(verts.size()), edges),
                      std::move(verts)});
  }
  return result;
}

namespace {

long long parse_int_token(const std::string& token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(Errc::malformed_input, "bad integer token '" + token + "'");
  return value;
}

}  // namespace

CubicGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;  // blank line
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) fail(Errc::malformed_input, "duplicate header line");
      std::string format, n_tok, m_tok, extra;
      if (!(fields >> format >> n_tok >> m_tok) || format != "cub" || (fields >> extra))
        fail(Errc::malformed_input, "header must be 'p cub <n> <m>'");
      n = parse_int_token(n_tok);
      m = parse_int_token(m_tok);
      if (n < 1 || m < 0) fail(Errc::malformed_input, "header counts out of range");
      have_header = true;
      continue;
    }
    if (kind == "e") {
      if (!have_header) fail(Errc::malformed_input, "edge line before header");
      std::string u_tok, v_tok, extra;
      if (!(fields >> u_tok >> v_tok) || (fields >> extra))
        fail(Errc::malformed_input, "edge line must be 'e <u> <v>'");
      long long u = parse_int_token(u_tok);
      long long v = parse_int_token(v_tok);
      if (u < 1 || u > n || v < 1 || v > n)
        fail(Errc::malformed_input, "edge endpoint out of range");
      if (static_cast<long long>(edges.size()) == m)
        fail(Errc::malformed_input, "more edges than declared");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    fail(Errc::malformed_input, "unrecognized line '" + line + "'");
  }
  if (!have_header) fail(Errc::malformed_input, "missing header line");
  if (static_cast<long long>(edges.size()) != m)
    fail(Errc::malformed_input, "fewer edges than declared");
  if (n % 2 != 0) fail(Errc::odd_order, "order must be even, got " + std::to_string(n));
  return CubicGraph::from_edges(static_cast<int>(n), edges);
}

std::string format_graph(const CubicGraph& g) {
  auto edge_list = g.edges();  // already sorted lexicographically
  std::string out = "p cub " + std::to_string(g.order()) + " " + std::to_string(edge_list.size()) + "\n";
  for (auto [u, v] : edge_list)
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

namespace {

struct PairingOutcome {
  bool ok = false;
  std::vector<std::pair<int, int>> edges;
};

// One configuration-model draw: pair stubs, reject loops and parallels.
PairingOutcome draw_pairing(int n, std::mt19937_64& rng) {
  std::vector<int> stubs;
  stubs.reserve(3 * n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < 3; ++i) stubs.push_back(v);
  fisher_yates(stubs, rng);

  PairingOutcome out;
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return out;
    auto& row = adj[std::min(u, v)];
    if (std::find(row.begin(), row.end(), std::max(u, v)) != row.end()) return out;
    row.push_back(std::max(u, v));
    out.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  out.ok = true;
  return out;
}

// Bipartite draw: left side 0..n/2-1, right side n/2..n-1, left stubs in
// fixed order matched against shuffled right stubs.
PairingOutcome draw_bipartite_pairing(int n, std::mt19937_64& rng) {
  int half = n / 2;
  std::vector<int> right_stubs;
  right_stubs.reserve(3 * half);
  for (int v = half; v < n; ++v)
    for (int i = 0; i < 3; ++i) right_stubs.push_back(v);
  fisher_yates(right_stubs, rng);

  PairingOutcome out;
  std::vector<std::vector<int>> adj(half);
  for (int i = 0; i < 3 * half; ++i) {
    int u = i / 3, v = right_stubs[i];
    auto& row = adj[u];
    if (std::find(row.begin(), row.end(), v) != row.end()) return out;
    row.push_back(v);
    out.edges.emplace_back(u, v);
  }
  out.ok = true;
  return out;
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  seen[0] = 1;
  frontier.push(0);
  int count = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        frontier.push(v);
      }
    }
  }
  return count == n;
}

}  // namespace

CubicGraph random_cubic(int order, std::uint64_t seed, std::optional<GraphClass> class_filter) {
  if (order < 6 || order % 2 != 0)
    fail(Errc::invalid_order, "generator requires even order >= 6, got " + std::to_string(order));
  if (class_filter == GraphClass::FourChromatic)
    fail(Errc::invalid_order, "four-chromatic filter not supported");

  std::mt19937_64 rng(seed);
  const int cap = 10000;
  for (int attempt = 0; attempt < cap; ++attempt) {
    PairingOutcome draw = (class_filter == GraphClass::Bicubic)
                              ? draw_bipartite_pairing(order, rng)
                              : draw_pairing(order, rng);
    if (!draw.ok) continue;
    if (!connected(order, draw.edges)) continue;
    CubicGraph g = CubicGraph::from_edges(order, draw.edges);
    if (class_filter == GraphClass::Tricubic && classify(g).kind != GraphClass::Tricubic) continue;
    return g;
  }
  fail(Errc::generation_exhausted, "no admissible pairing within 10000 resamples");
}

namespace graphs {

CubicGraph k4() {
  return CubicGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph k33() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
  return CubicGraph::from_edges(6, edges);
}

CubicGraph prism() {
  return CubicGraph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

CubicGraph cube() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
  return CubicGraph::from_edges(8, edges);
}

CubicGraph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);
    edges.emplace_back(v, v + 5);
    edges.emplace_back(v + 5, 5 + (v + 2) % 5);
  }
  return CubicGraph::from_edges(10, edges);
}

}  // namespace graphs

}  // namespace cubsched
