#include "cubsched/oracle.hpp"

#include "cubsched/error.hpp"

#include <algorithm>
#include <bitset>
#include <queue>

namespace cubsched {

namespace {

constexpr int kMaxOracleOrder = 64;
using SumSet = std::bitset<kMaxOracleOrder + 1>;

// Breadth-first visit order, component by component; every vertex after
// the first of its component has an already-visited neighbor, which
// keeps the coloring search constrained from the start.
std::vector<int> bfs_order(const CubicGraph& g) {
  std::vector<int> order;
  order.reserve(g.order());
  std::vector<char> seen(g.order(), 0);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::queue<int> frontier;
    seen[root] = 1;
    frontier.push(root);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      order.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          frontier.push(v);
        }
      }
    }
  }
  return order;
}

void check_budget(const CubicGraph& g, const OracleBudget& budget) {
  int cap = std::min(budget.max_vertices, kMaxOracleOrder);
  if (g.order() > cap)
    fail(Errc::budget_exceeded,
         "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
}

void check_feasible(const CubicGraph& g) {
  for (const auto& comp : components(g))
    if (comp.graph.order() == 4)
      fail(Errc::infeasible, "4-chromatic");
}

// Exhaustive enumeration of proper <=3-colorings.  Color classes are
// canonicalized (a new class index may be opened only in order), so
// each partition into independent sets is visited exactly once.
class ColoringSearch {
public:
  ColoringSearch(const CubicGraph& g, long long node_limit)
      : g_(g), node_limit_(node_limit), order_(bfs_order(g)), color_(g.order(), -1) {}

  // Calls visit(sizes, color_by_vertex) for every complete coloring
  // that survives prune(sizes_so_far).  visit returns false to stop
  // the whole search early.
  template <typename Prune, typename Visit>
  void run(Prune&& prune, Visit&& visit) {
    stopped_ = false;
    descend(0, 0, prune, visit);
    if (nodes_ > node_limit_)
      fail(Errc::budget_exceeded, "coloring enumeration exceeded node limit");
  }

private:
  template <typename Prune, typename Visit>
  void descend(int pos, int classes_open, Prune& prune, Visit& visit) {
    if (stopped_ || ++nodes_ > node_limit_) {
      stopped_ = true;
      return;
    }
    if (pos == g_.order()) {
      if (!visit(sizes_, color_)) stopped_ = true;
      return;
    }
    int v = order_[pos];
    int limit = std::min(2, classes_open);
    for (int c = 0; c <= limit; ++c) {
      bool clash = false;
      for (int u : g_.neighbors(v)) {
        if (color_[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      ++sizes_[c];
      if (!prune(sizes_)) descend(pos + 1, std::max(classes_open, c + 1), prune, visit);
      --sizes_[c];
      color_[v] = -1;
      if (stopped_) return;
    }
  }

  const CubicGraph& g_;
  long long node_limit_;
  long long nodes_ = 0;
  bool stopped_ = false;
  std::vector<int> order_;
  std::vector<int> color_;
  std::array<int, 3> sizes_{0, 0, 0};
};

std::array<int, 3> sorted_desc(std::array<int, 3> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

// Largest load m a machine of the given speed can carry while staying
// strictly below the value bound: max m with m / speed < bound.
long long strict_cap(const Rational& bound, const Rational& speed) {
  Rational limit = bound * speed;
  long long q = limit.numerator() / limit.denominator();
  if (limit.numerator() % limit.denominator() == 0) return q - 1;
  return q;
}

}  // namespace

Schedule optimal_schedule_exact(const CubicGraph& g, const MachineSpeeds& speeds,
                                const OracleBudget& budget) {
  check_budget(g, budget);
  check_feasible(g);

  const int n = g.order();
  const int min_largest = (n + 2) / 3;  // ceil(n/3): largest class at least this

  bool have_best = false;
  Rational best_value;
  std::vector<int> best_color;
  // caps[j]: largest size the j-th largest class may have in a
  // coloring strictly better than the incumbent; integer form of the
  // rational comparison, refreshed whenever the incumbent improves
  std::array<long long, 3> caps{};

  auto refresh_caps = [&] {
    caps = {strict_cap(best_value, speeds.s1), strict_cap(best_value, speeds.s2),
            strict_cap(best_value, speeds.s3)};
  };

  auto prune = [&](const std::array<int, 3>& sizes) {
    if (!have_best) return false;
    auto f = sorted_desc(sizes);
    // each order statistic only grows as vertices are added, so a
    // current violation rules out every completion
    for (int j = 0; j < 3; ++j)
      if (f[j] > caps[j]) return true;
    return false;
  };

  auto visit = [&](const std::array<int, 3>& sizes, const std::vector<int>& color) {
    auto f = sorted_desc(sizes);
    Rational value = Rational(f[0]) / speeds.s1;
    value = std::max(value, Rational(f[1]) / speeds.s2);
    value = std::max(value, Rational(f[2]) / speeds.s3);
    if (!have_best || value < best_value) {
      have_best = true;
      best_value = value;
      best_color = color;
      refresh_caps();
      // nothing can beat a schedule that the counting bound already
      // meets: largest class is at least ceil(n/3)
      if (caps[0] < min_largest) return false;
    }
    return true;
  };

  ColoringSearch search(g, budget.node_limit);
  search.run(prune, visit);

  if (!have_best) fail(Errc::infeasible, "no proper 3-coloring found");

  // classes to machines: decreasing size onto decreasing speed
  std::array<int, 3> sizes{0, 0, 0};
  for (int c : best_color) ++sizes[c];
  std::array<int, 3> class_order{0, 1, 2};
  std::stable_sort(class_order.begin(), class_order.end(),
                   [&](int x, int y) { return sizes[x] > sizes[y]; });

  Schedule sched;
  for (int machine = 0; machine < 3; ++machine) {
    int cls = class_order[machine];
    for (int v = 0; v < n; ++v)
      if (best_color[v] == cls) sched.loads[machine].push_back(v);
  }
  sched.makespan = best_value;
  sched.route = "oracle";
  return sched;
}

namespace {

struct MisState {
  std::vector<std::array<int, 3>> adjacency;
  std::vector<char> alive;
  std::vector<int> degree;
  int alive_count = 0;
  int best = 0;
  long long nodes = 0;
  long long node_limit = 0;

  void remove(int v, std::vector<int>& log) {
    alive[v] = 0;
    --alive_count;
    log.push_back(v);
    for (int u : adjacency[v])
      if (alive[u]) --degree[u];
  }

  void restore(std::vector<int>& log, std::size_t mark) {
    while (log.size() > mark) {
      int v = log.back();
      log.pop_back();
      alive[v] = 1;
      ++alive_count;
      for (int u : adjacency[v])
        if (alive[u]) ++degree[u];
    }
  }

  void search(int current, std::vector<int>& log) {
    if (++nodes > node_limit) fail(Errc::budget_exceeded, "independence search exceeded node limit");
    if (current + alive_count <= best) return;
    if (alive_count == 0) {
      best = std::max(best, current);
      return;
    }
    int v = -1;
    for (int u = 0; u < static_cast<int>(alive.size()); ++u)
      if (alive[u] && (v == -1 || degree[u] < degree[v])) v = u;

    std::size_t mark = log.size();
    // include v: drop its closed neighborhood
    remove(v, log);
    for (int u : adjacency[v])
      if (alive[u]) remove(u, log);
    search(current + 1, log);
    restore(log, mark);
    // exclude v
    remove(v, log);
    search(current, log);
    restore(log, mark);
  }
};

}  // namespace

int independence_number(const CubicGraph& g, const OracleBudget& budget) {
  check_budget(g, budget);
  MisState state;
  state.adjacency.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) state.adjacency.push_back(g.neighbors(v));
  state.alive.assign(g.order(), 1);
  state.degree.assign(g.order(), 3);
  state.alive_count = g.order();
  state.node_limit = budget.node_limit;
  std::vector<int> log;
  state.search(0, log);
  return state.best;
}

bool three_colorable(const CubicGraph& g, const OracleBudget& budget) {
  check_budget(g, budget);
  for (const auto& comp : components(g))
    if (comp.graph.order() == 4) return false;
  bool found = false;
  ColoringSearch search(g, budget.node_limit);
  search.run([](const std::array<int, 3>&) { return false; },
             [&](const std::array<int, 3>&, const std::vector<int>&) {
               found = true;
               return false;
             });
  return found;
}

namespace {

// Enumerates independent sets of exact target size in lexicographic
// order, invoking try_set for each; try_set returns true to stop.
class IndependentSetEnumerator {
public:
  IndependentSetEnumerator(const CubicGraph& g, int target, long long node_limit)
      : g_(g), target_(target), node_limit_(node_limit), blocked_(g.order(), 0) {}

  template <typename TrySet>
  bool run(TrySet&& try_set) {
    done_ = false;
    descend(0, try_set);
    if (nodes_ > node_limit_)
      fail(Errc::budget_exceeded, "independent set enumeration exceeded node limit");
    return done_;
  }

private:
  template <typename TrySet>
  void descend(int v, TrySet& try_set) {
    if (done_ || ++nodes_ > node_limit_) {
      done_ = done_ || nodes_ > node_limit_;
      return;
    }
    if (static_cast<int>(chosen_.size()) == target_) {
      if (try_set(chosen_)) done_ = true;
      return;
    }
    if (v == g_.order()) return;
    if (g_.order() - v < target_ - static_cast<int>(chosen_.size())) return;
    if (!blocked_[v]) {
      chosen_.push_back(v);
      for (int u : g_.neighbors(v)) ++blocked_[u];
      descend(v + 1, try_set);
      for (int u : g_.neighbors(v)) --blocked_[u];
      chosen_.pop_back();
      if (done_) return;
    }
    descend(v + 1, try_set);
  }

  const CubicGraph& g_;
  int target_;
  long long node_limit_;
  long long nodes_ = 0;
  bool done_ = false;
  std::vector<int> chosen_;
  std::vector<int> blocked_;
};

}  // namespace

SemiEquitableResult exists_semi_equitable(const CubicGraph& g, SizeTriple sizes,
                                          const OracleBudget& budget) {
  check_budget(g, budget);
  if (sizes.sum() != g.order())
    fail(Errc::size_mismatch, "sizes sum to " + std::to_string(sizes.sum()) + ", order is " +
                                  std::to_string(g.order()));
  if (sizes.a < sizes.b || sizes.b < sizes.c || sizes.c < 0)
    fail(Errc::size_mismatch, "sizes must be given in decreasing order");

  SemiEquitableResult result;

  auto try_set = [&](const std::vector<int>& a_set) {
    // residual of the candidate independent set, kept in host indexing
    std::vector<char> removed(g.order(), 0);
    for (int v : a_set) removed[v] = 1;

    std::vector<int> side(g.order(), -1);
    std::vector<std::vector<int>> comp_members;
    std::vector<std::array<int, 2>> comp_sides;
    int isolated = 0;
    std::vector<int> isolated_verts;

    for (int root = 0; root < g.order(); ++root) {
      if (removed[root] || side[root] != -1) continue;
      bool alone = true;
      for (int u : g.neighbors(root))
        if (!removed[u]) alone = false;
      if (alone) {
        ++isolated;
        isolated_verts.push_back(root);
        side[root] = 0;
        continue;
      }
      comp_members.emplace_back();
      std::array<int, 2> counts{0, 0};
      std::queue<int> frontier;
      side[root] = 0;
      frontier.push(root);
      while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        comp_members.back().push_back(u);
        ++counts[side[u]];
        for (int w : g.neighbors(u)) {
          if (removed[w]) continue;
          if (side[w] == -1) {
            side[w] = 1 - side[u];
            frontier.push(w);
          } else if (side[w] == side[u]) {
            return false;  // odd cycle in the residual
          }
        }
      }
      comp_sides.push_back(counts);
    }

    // which component sides go into the b-class: subset-sum with the
    // isolated vertices as slack
    std::vector<SumSet> layers(comp_sides.size() + 1);
    layers[0].set(0);
    for (std::size_t k = 0; k < comp_sides.size(); ++k)
      layers[k + 1] = (layers[k] << comp_sides[k][0]) | (layers[k] << comp_sides[k][1]);

    int pick = -1;
    for (int s = 0; s <= sizes.b; ++s) {
      if (layers[comp_sides.size()].test(s) && sizes.b - s <= isolated) {
        pick = s;
        break;
      }
    }
    if (pick < 0) return false;

    // reconstruct side orientation per component
    std::vector<int> side_to_b(comp_sides.size(), 0);
    int remaining = pick;
    for (std::size_t k = comp_sides.size(); k-- > 0;) {
      if (remaining >= comp_sides[k][0] && layers[k].test(remaining - comp_sides[k][0])) {
        side_to_b[k] = 0;
        remaining -= comp_sides[k][0];
      } else {
        side_to_b[k] = 1;
        remaining -= comp_sides[k][1];
      }
    }

    Coloring witness;
    witness.class_of.assign(g.order(), -1);
    witness.classes = 3;
    for (int v : a_set) witness.class_of[v] = 0;
    for (std::size_t k = 0; k < comp_sides.size(); ++k)
      for (int v : comp_members[k])
        witness.class_of[v] = (side[v] == side_to_b[k]) ? 1 : 2;
    int still_b = sizes.b - pick;
    for (int v : isolated_verts) {
      witness.class_of[v] = (still_b > 0) ? 1 : 2;
      if (still_b > 0) --still_b;
    }

    // certificate check: never report true on an unverified witness
    auto witness_sizes = witness.sizes();
    if (!is_proper(g, witness) || witness_sizes[0] != sizes.a ||
        witness_sizes[1] != sizes.b || witness_sizes[2] != sizes.c)
      throw std::logic_error("semi-equitable witness failed verification");

    result.exists = true;
    result.witness = std::move(witness);
    return true;
  };

  IndependentSetEnumerator enumerator(g, sizes.a, budget.node_limit);
  enumerator.run(try_set);
  return result;
}

bool verify_schedule(const CubicGraph& g, const MachineSpeeds& speeds, const Schedule& sched) {
  std::vector<int> owner(g.order(), -1);
  for (int machine = 0; machine < 3; ++machine) {
    for (int v : sched.loads[machine]) {
      if (v < 0 || v >= g.order() || owner[v] != -1) return false;
      owner[v] = machine;
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (owner[v] == -1) return false;
  for (auto [u, v] : g.edges())
    if (owner[u] == owner[v]) return false;
  return makespan(sched.loads, speeds) == sched.makespan;
}

}  // namespace cubsched
