#include "cubsched/scheduler.hpp"

#include "cubsched/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubsched {

MachineSpeeds MachineSpeeds::make(Rational a, Rational b, Rational c) {
  if (c <= Rational(0) || a < b || b < c)
    fail(Errc::malformed_input, "speeds must satisfy s1 >= s2 >= s3 > 0");
  return MachineSpeeds{a, b, c};
}

MachineSpeeds MachineSpeeds::from_text(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.push_back(text.substr(pos));
      break;
    }
    fields.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (fields.size() != 3)
    fail(Errc::malformed_input, "speeds must have three comma-separated entries");
  return make(parse_positive_rational(fields[0]), parse_positive_rational(fields[1]),
              parse_positive_rational(fields[2]));
}

Rational makespan(const std::array<std::vector<int>, 3>& loads, const MachineSpeeds& speeds) {
  Rational best(0);
  for (int m = 0; m < 3; ++m) {
    Rational t = Rational(static_cast<long long>(loads[m].size())) / speeds.speed(m);
    if (t > best) best = t;
  }
  return best;
}

LoadTargets ideal_loads(int n, const MachineSpeeds& speeds) {
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("load targets need an even order of at least 6");
  LoadTargets t;
  t.n = n;
  Rational total = speeds.sum();
  t.ideal = {Rational(n) * speeds.s1 / total, Rational(n) * speeds.s2 / total,
             Rational(n) * speeds.s3 / total};
  t.fast_regime = speeds.s1 >= speeds.s2 + speeds.s3;
  if (t.fast_regime) {
    // the fastest machine takes a full half; the proportional split
    // point of the rest is rounded whichever way finishes sooner
    // (ceiling on ties)
    const int half = n / 2;
    Rational split = Rational(half) * speeds.s2 / (speeds.s2 + speeds.s3);
    auto rest_time = [&](int b) {
      return std::max(Rational(b) / speeds.s2, Rational(half - b) / speeds.s3);
    };
    int up = static_cast<int>(ceil_rational(split));
    int down_raw = static_cast<int>(floor_rational(split));
    int down = std::max(down_raw, half - down_raw);
    int n2 = rest_time(down) < rest_time(up) ? down : up;
    t.chosen = {half, n2, half - n2};
  }
  return t;
}

std::vector<std::array<int, 3>> round_candidates(const LoadTargets& targets, RoundMode mode) {
  const int n = targets.n;
  const long long f1 = floor_rational(targets.ideal[0]);
  const long long c1 = ceil_rational(targets.ideal[0]);

  std::vector<std::array<int, 3>> out;
  auto push_unique = [&](std::array<int, 3> cand) {
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  };

  if (mode == RoundMode::Bicubic) {
    const long long f2 = floor_rational(targets.ideal[1]);
    const long long c2 = ceil_rational(targets.ideal[1]);
    const std::array<std::array<long long, 2>, 4> forms{{{f1, c2}, {c1, f2}, {c1, c2}, {f1, f2}}};
    for (auto [a, b] : forms) {
      std::array<int, 3> cand{static_cast<int>(a), static_cast<int>(b),
                              static_cast<int>(n - a - b)};
      std::sort(cand.begin(), cand.end(), std::greater<int>());
      if (cand[2] < 0 || cand[0] > n / 2) continue;
      push_unique(cand);
    }
    if (out.empty())
      fail(Errc::no_feasible_candidate, "all rounded load triples exceed half the order");
    return out;
  }

  for (long long m : {f1, c1}) {
    std::array<int, 3> cand{static_cast<int>(m), static_cast<int>((n - m + 1) / 2),
                            static_cast<int>((n - m) / 2)};
    if (cand[1] < 0 || cand[2] < 0) continue;
    push_unique(cand);
  }
  if (out.empty()) fail(Errc::no_feasible_candidate, "no rounded load triple is feasible");
  return out;
}

namespace {

Rational eval_triple(const std::array<int, 3>& counts, const MachineSpeeds& speeds) {
  Rational best(0);
  for (int m = 0; m < 3; ++m) {
    Rational t = Rational(counts[m]) / speeds.speed(m);
    if (t > best) best = t;
  }
  return best;
}

// Machine loads from a 3-class coloring: slot k receives the first
// unused class whose size equals counts[k].
std::array<std::vector<int>, 3> loads_by_size(const Coloring& col,
                                              const std::array<int, 3>& counts) {
  auto sizes = col.sizes();
  std::array<std::vector<int>, 3> classes;
  for (int v = 0; v < static_cast<int>(col.class_of.size()); ++v)
    if (col.class_of[v] >= 0) classes[col.class_of[v]].push_back(v);

  std::array<std::vector<int>, 3> loads;
  std::array<char, 3> used{0, 0, 0};
  for (int slot = 0; slot < 3; ++slot) {
    int pick = -1;
    for (int c = 0; c < 3 && pick == -1; ++c)
      if (!used[c] && sizes[c] == counts[slot]) pick = c;
    if (pick == -1) throw std::logic_error("coloring class sizes do not match the requested counts");
    used[pick] = 1;
    loads[slot] = std::move(classes[pick]);
  }
  return loads;
}

Schedule finish(std::array<std::vector<int>, 3> loads, const MachineSpeeds& speeds,
                std::string route) {
  for (auto& load : loads) std::sort(load.begin(), load.end());
  Schedule s;
  s.makespan = makespan(loads, speeds);
  s.loads = std::move(loads);
  s.route = std::move(route);
  return s;
}

// Largest-first assignment of one bipartition side plus an
// ascending-order split of the other side, for the fast-machine
// branch.
Schedule fast_branch(const std::vector<int>& side1, const std::vector<int>& side2,
                     const std::array<int, 3>& counts, const MachineSpeeds& speeds,
                     std::string route) {
  std::array<std::vector<int>, 3> loads;
  loads[0] = side1;
  loads[1].assign(side2.begin(), side2.begin() + counts[1]);
  loads[2].assign(side2.begin() + counts[1], side2.end());
  return finish(std::move(loads), speeds, std::move(route));
}

}  // namespace

Schedule schedule_k33(const CubicGraph& g, const MachineSpeeds& speeds) {
  auto sides = bipartition(g);
  if (g.order() != 6 || !sides)
    throw std::invalid_argument("closed form applies to the complete bipartite graph on 3+3 only");

  const auto& first_side = sides->first;
  const auto& other_side = sides->second;
  // variant A: 3 + 2 + 1, variant B: 3 + 3 + idle
  Rational va = std::max({Rational(3) / speeds.s1, Rational(2) / speeds.s2,
                          Rational(1) / speeds.s3});
  Rational vb = Rational(3) / speeds.s2;

  std::array<std::vector<int>, 3> loads;
  loads[0] = first_side;
  if (va <= vb) {
    loads[1] = {other_side[0], other_side[1]};
    loads[2] = {other_side[2]};
  } else {
    loads[1] = other_side;
  }
  return finish(std::move(loads), speeds, "k33");
}

Schedule schedule_prism(const CubicGraph& g, const MachineSpeeds& speeds) {
  if (g.order() != 6 || bipartition(g))
    throw std::invalid_argument("this closed form applies to the prism only");
  // every independent set has at most 2 vertices, so (2,2,2) is forced
  auto col = brooks_three_coloring(g);
  return finish(loads_by_size(col, {2, 2, 2}), speeds, "prism");
}

Schedule schedule_bicubic(const CubicGraph& g, const MachineSpeeds& speeds) {
  auto sides = bipartition(g);
  if (!sides) fail(Errc::not_bicubic, "graph is not bipartite");
  if (components(g).size() != 1)
    fail(Errc::unsupported_structure, "disconnected input needs the per-component scheduler");
  if (g.order() == 6)
    fail(Errc::excluded_graph, "complete bipartite 3+3 graph has its own closed form");

  LoadTargets targets = ideal_loads(g.order(), speeds);
  if (targets.fast_regime)
    return fast_branch(sides->first, sides->second, targets.chosen, speeds, "bicubic/fast");

  auto candidates = round_candidates(targets, RoundMode::Bicubic);
  std::array<int, 3> chosen = candidates.front();
  Rational best = eval_triple(chosen, speeds);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rational t = eval_triple(candidates[i], speeds);
    if (t < best) {
      best = t;
      chosen = candidates[i];
    }
  }
  auto col = modified_clw(g, Coloring{}, SizeTriple{chosen[0], chosen[1], chosen[2]});
  return finish(loads_by_size(col, chosen), speeds, "bicubic/clw");
}

Schedule schedule_tricubic(const CubicGraph& g, const MachineSpeeds& speeds) {
  if (components(g).size() != 1)
    fail(Errc::unsupported_structure, "disconnected input is not supported on this path");
  if (classify(g).kind != GraphClass::Tricubic) fail(Errc::not_tricubic, "graph is not tricubic");
  if (g.order() == 6) fail(Errc::excluded_graph, "the prism has its own closed form");
  if (speeds.s2 != speeds.s3 || speeds.s1 == speeds.s2)
    fail(Errc::unsupported_speeds, "this path expects s1 > s2 = s3");

  const int n = g.order();
  auto equitable_path = [&]() {
    auto col = equitable_clw(g, brooks_three_coloring(g));
    auto sizes = col.sizes();
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return finish(loads_by_size(col, sizes), speeds, "tricubic/equitable");
  };

  IndependentSet greedy = greedy_independent_set(g);
  if (5 * static_cast<int>(greedy.size()) < 2 * n) return equitable_path();

  IndependentSet removed;
  try {
    removed = bipartize(g, greedy);
  } catch (const SolverError& e) {
    if (e.code() == Errc::search_exhausted) return equitable_path();
    throw;
  }

  ResidualGraph res = residual(g, removed);
  Coloring two = equitable_two_coloring(res.graph);
  std::array<std::vector<int>, 2> halves;
  for (int v = 0; v < res.graph.order(); ++v)
    halves[two.class_of[v]].push_back(res.to_original[v]);
  if (halves[1].size() > halves[0].size()) std::swap(halves[0], halves[1]);

  if (speeds.s1 >= 2 * speeds.s2) {
    std::array<std::vector<int>, 3> loads{removed, halves[0], halves[1]};
    return finish(std::move(loads), speeds, "tricubic/fast");
  }

  LoadTargets targets = ideal_loads(n, speeds);
  auto candidates = round_candidates(targets, RoundMode::Tricubic);
  std::array<int, 3> winner = candidates.front();
  Rational best = eval_triple(winner, speeds);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rational t = eval_triple(candidates[i], speeds);
    if (t < best) {
      best = t;
      winner = candidates[i];
    }
  }
  const int n_star = winner[0];

  if (n_star < static_cast<int>(removed.size())) {
    Coloring start;
    start.classes = 3;
    start.class_of.assign(n, -1);
    for (int v : removed) start.class_of[v] = 0;
    for (int v : halves[0]) start.class_of[v] = 1;
    for (int v : halves[1]) start.class_of[v] = 2;
    std::array<int, 3> counts{n_star, (n - n_star + 1) / 2, (n - n_star) / 2};
    auto col = modified_clw(g, start, make_size_triple(counts[0], counts[1], counts[2]));
    return finish(loads_by_size(col, counts), speeds, "tricubic/refine");
  }

  std::array<std::vector<int>, 3> loads{removed, halves[0], halves[1]};
  return finish(std::move(loads), speeds, "tricubic/direct");
}

Schedule schedule_disconnected_bicubic(const CubicGraph& g, const MachineSpeeds& speeds) {
  auto sides = bipartition(g);
  if (!sides) fail(Errc::not_bicubic, "every component must be bipartite");
  auto comps = components(g);
  for (const auto& comp : comps)
    if (comp.graph.order() == 6)
      fail(Errc::component_excluded, "a complete bipartite 3+3 component cannot be split further");

  const int n = g.order();
  LoadTargets targets = ideal_loads(n, speeds);
  std::array<int, 3> global;
  if (targets.fast_regime) {
    global = targets.chosen;
  } else {
    auto candidates = round_candidates(targets, RoundMode::Bicubic);
    global = candidates.front();
    Rational best = eval_triple(global, speeds);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      Rational t = eval_triple(candidates[i], speeds);
      if (t < best) {
        best = t;
        global = candidates[i];
      }
    }
  }

  std::array<std::vector<int>, 3> loads;
  std::array<int, 3> running{0, 0, 0};
  int seen = 0;
  for (const auto& comp : comps) {
    const int m = comp.graph.order();
    seen += m;
    // pick the split whose running prefix counts stay closest to the
    // global proportions, scanning splits largest-first
    std::array<int, 3> pick{-1, -1, -1};
    Rational pick_dev(0);
    for (int x = m / 2; x >= 0; --x) {
      for (int y = std::min(m - x, m / 2); y >= 0 && m - x - y <= m / 2; --y) {
        int z = m - x - y;
        std::array<int, 3> cand{x, y, z};
        Rational dev(0);
        for (int slot = 0; slot < 3; ++slot) {
          Rational target = Rational(seen) * Rational(global[slot]) / Rational(n);
          Rational got(running[slot] + cand[slot]);
          dev += got >= target ? got - target : target - got;
        }
        if (pick[0] == -1 || dev < pick_dev) {
          pick = cand;
          pick_dev = dev;
        }
      }
    }
    auto col = modified_clw(comp.graph, Coloring{},
                            make_size_triple(pick[0], pick[1], pick[2]));
    auto comp_loads = loads_by_size(col, pick);
    for (int slot = 0; slot < 3; ++slot) {
      running[slot] += pick[slot];
      for (int v : comp_loads[slot]) loads[slot].push_back(comp.to_original[v]);
    }
  }
  return finish(std::move(loads), speeds, "disconnected-bicubic");
}

Schedule schedule(const CubicGraph& g, const MachineSpeeds& speeds) {
  auto comps = components(g);
  for (const auto& comp : comps)
    if (comp.graph.order() == 4) fail(Errc::infeasible, "4-chromatic");

  if (comps.size() == 1) {
    if (g.order() == 6)
      return bipartition(g) ? schedule_k33(g, speeds) : schedule_prism(g, speeds);
    if (speeds.s1 == speeds.s2 && speeds.s2 == speeds.s3) {
      auto col = equitable_clw(g, brooks_three_coloring(g));
      auto sizes = col.sizes();
      std::sort(sizes.begin(), sizes.end(), std::greater<int>());
      return finish(loads_by_size(col, sizes), speeds, "equitable");
    }
    if (classify(g).kind == GraphClass::Bicubic) return schedule_bicubic(g, speeds);
    if (speeds.s2 != speeds.s3)
      fail(Errc::unsupported_speeds, "3-chromatic inputs need s2 = s3 unless all speeds are equal");
    return schedule_tricubic(g, speeds);
  }

  if (bipartition(g)) return schedule_disconnected_bicubic(g, speeds);
  fail(Errc::unsupported_structure, "disconnected input with a 3-chromatic component");
}

std::string format_schedule(const Schedule& sched, const MachineSpeeds& speeds) {
  std::ostringstream out;
  out << "route " << sched.route << "\n";
  out << "makespan " << format_rational(sched.makespan) << "\n";
  for (int m = 0; m < 3; ++m) {
    out << "machine " << (m + 1) << " speed " << format_rational(speeds.speed(m)) << " load "
        << sched.loads[m].size() << " jobs";
    for (int v : sched.loads[m]) out << ' ' << (v + 1);
    out << "\n";
  }
  return out.str();
}

}  // namespace cubsched
