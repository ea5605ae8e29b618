#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace rfot::testing {
namespace {

bool delayed(std::uint64_t mask, EdgeIndex e) { return (mask >> e) & 1U; }

// Time from leaving s to entering position `pos` of the path, or nullopt if
// an infinitely delayed edge comes first.
std::optional<Time> offset_before(const Path& path, std::size_t pos, std::uint64_t mask,
                                  const Instance& inst) {
  Time offset = 0;
  for (std::size_t k = 0; k < pos; ++k) {
    const Edge& edge = inst.edges[path.edges[k]];
    offset += edge.travel_time;
    if (delayed(mask, path.edges[k])) {
      if (edge.delay.is_infinite()) return std::nullopt;
      offset += edge.delay.value();
    }
  }
  return offset;
}

// max{0, T - tau(P) - Delta_z(P)} with infinite delay giving 0.
Time cutoff(const Path& path, std::uint64_t mask, const Instance& inst) {
  const auto total = offset_before(path, path.edges.size(), mask, inst);
  if (!total) return 0;
  return std::max<Time>(0, inst.horizon - *total);
}

Rational step_rate(const std::vector<FlowSegment>& segments, const Rational& at) {
  Rational rate = 0;
  for (const auto& seg : segments) {
    if (seg.breakpoint > at) break;
    rate = seg.rate;
  }
  return rate;
}

Rational step_integral(const std::vector<FlowSegment>& segments, const Rational& upto) {
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < segments.size(); ++k) {
    const Rational lo = segments[k].breakpoint;
    const Rational hi = std::min<Rational>(segments[k + 1].breakpoint, upto);
    if (hi > lo) total += segments[k].rate * (hi - lo);
  }
  return total;
}

}  // namespace

Rational harmonic(int r) {
  Rational h = 0;
  for (int i = 1; i <= r; ++i) h += make_rational(1, i);
  return h;
}

bool has_clique(const UndirectedGraph& graph, int r) {
  const int n = graph.num_vertices;
  std::vector<std::vector<bool>> adjacent(n + 1, std::vector<bool>(n + 1, false));
  for (auto [i, j] : graph.edges) adjacent[i][j] = adjacent[j][i] = true;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      for (int j = i + 1; j < n && clique; ++j) {
        if ((mask >> i & 1U) && (mask >> j & 1U) && !adjacent[i + 1][j + 1]) clique = false;
      }
    }
    if (clique) return true;
  }
  return false;
}

std::size_t max_stable_set(const std::vector<Interval>& intervals) {
  const std::size_t n = intervals.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i) {
      for (std::size_t j = i + 1; j < n && stable; ++j) {
        if (!(mask >> i & 1U) || !(mask >> j & 1U)) continue;
        const auto& a = intervals[i];
        const auto& b = intervals[j];
        if (a.left <= b.right && b.left <= a.right) stable = false;
      }
    }
    if (stable) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

std::vector<std::uint64_t> all_scenario_masks(const Instance& inst) {
  std::vector<std::uint64_t> masks;
  const std::size_t m = inst.edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) <= inst.budget) masks.push_back(mask);
  }
  return masks;
}

Scenario mask_to_scenario(std::uint64_t mask, const Instance& inst) {
  std::vector<EdgeIndex> edges;
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
    if (delayed(mask, e)) edges.push_back(e);
  }
  return Scenario(edges);
}

std::vector<Path> all_paths(const Instance& inst) {
  std::vector<Path> paths;
  std::vector<bool> visited(inst.vertices.size(), false);
  std::vector<EdgeIndex> stack;
  std::function<void(VertexIndex)> walk = [&](VertexIndex v) {
    if (v == inst.sink) {
      paths.push_back(Path{stack});
      return;
    }
    visited[v] = true;
    for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
      if (inst.edges[e].tail != v || visited[inst.edges[e].head]) continue;
      stack.push_back(e);
      walk(inst.edges[e].head);
      stack.pop_back();
    }
    visited[v] = false;
  };
  walk(inst.source);
  return paths;
}

Rational value_under(const TripleSolution& sol, std::uint64_t mask, const Instance& inst) {
  Rational total = 0;
  for (const auto& t : sol.triples) {
    const Time c = cutoff(t.path, mask, inst);
    const Time len = std::max<Time>(0, std::min(t.end, c) - t.start);
    total += t.rate * Rational(len);
  }
  return total;
}

Rational robust_value(const TripleSolution& sol, const Instance& inst) {
  std::optional<Rational> best;
  for (auto mask : all_scenario_masks(inst)) {
    const Rational v = value_under(sol, mask, inst);
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational robust_value_tr(const TemporallyRepeatedFlow& flow, const Instance& inst) {
  std::optional<Rational> best;
  for (auto mask : all_scenario_masks(inst)) {
    Rational v = 0;
    for (const auto& [path, rate] : flow.rates) v += rate * Rational(cutoff(path, mask, inst));
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational robust_value_piecewise(const PiecewiseConstantFlow& flow, const Instance& inst) {
  std::optional<Rational> best;
  for (auto mask : all_scenario_masks(inst)) {
    Rational v = 0;
    for (const auto& [path, segments] : flow.paths) {
      v += step_integral(segments, Rational(cutoff(path, mask, inst)));
    }
    if (!best || v < *best) best = v;
  }
  return *best;
}

bool is_feasible(const TripleSolution& sol, const Instance& inst) {
  for (auto mask : all_scenario_masks(inst)) {
    for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
      if (inst.edges[e].capacity.is_infinite()) continue;
      for (Time t = 0; t < inst.horizon; ++t) {
        Rational load = 0;
        for (const auto& triple : sol.triples) {
          for (std::size_t pos = 0; pos < triple.path.edges.size(); ++pos) {
            if (triple.path.edges[pos] != e) continue;
            const auto offset = offset_before(triple.path, pos, mask, inst);
            if (!offset) continue;
            const Time theta = t - *offset;
            if (theta >= triple.start && theta < triple.end) load += triple.rate;
          }
        }
        if (load > inst.edges[e].capacity.value()) return false;
      }
    }
  }
  return true;
}

bool is_feasible_piecewise(const PiecewiseConstantFlow& flow, const Instance& inst, int grid) {
  for (auto mask : all_scenario_masks(inst)) {
    for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
      if (inst.edges[e].capacity.is_infinite()) continue;
      for (Time k = 0; k < inst.horizon * grid; ++k) {
        const Rational t = make_rational(k, grid);
        Rational load = 0;
        for (const auto& [path, segments] : flow.paths) {
          for (std::size_t pos = 0; pos < path.edges.size(); ++pos) {
            if (path.edges[pos] != e) continue;
            const auto offset = offset_before(path, pos, mask, inst);
            if (offset) load += step_rate(segments, t - *offset);
          }
        }
        if (load > inst.edges[e].capacity.value()) return false;
      }
    }
  }
  return true;
}

std::optional<std::string> check_lp_certificate(const LpProblem& problem,
                                                const LpSolution& solution) {
  const std::size_t n = problem.num_variables();
  if (solution.primal.size() != n || solution.duals.size() != problem.constraints.size()) {
    return "solution has the wrong dimensions";
  }
  Rational primal_objective = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& x = solution.primal[j];
    if (x < 0) return "negative primal value";
    if (problem.upper[j] && x > *problem.upper[j]) return "upper bound violated";
    primal_objective += problem.objective[j] * x;
  }
  if (primal_objective != solution.objective) return "reported objective is not c^T x";

  std::vector<Rational> reduced(problem.objective.begin(), problem.objective.end());
  Rational dual_objective = 0;
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& row = problem.constraints[i];
    const Rational& y = solution.duals[i];
    Rational lhs = 0;
    for (const auto& term : row.terms) {
      lhs += term.coefficient * solution.primal[term.variable];
      reduced[term.variable] -= term.coefficient * y;
    }
    const bool ok = row.relation == Relation::kLessEqual      ? lhs <= row.rhs
                    : row.relation == Relation::kGreaterEqual ? lhs >= row.rhs
                                                              : lhs == row.rhs;
    if (!ok) return "row " + std::to_string(i) + " violated";
    if (row.relation == Relation::kLessEqual && y < 0) return "negative dual on a <= row";
    if (row.relation == Relation::kGreaterEqual && y > 0) return "positive dual on a >= row";
    if (y != 0 && lhs != row.rhs) return "slack row " + std::to_string(i) + " has nonzero dual";
    dual_objective += row.rhs * y;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Rational w = j < solution.bound_duals.size() ? solution.bound_duals[j] : Rational(0);
    if (w < 0) return "negative bound dual";
    if (w != 0) {
      if (!problem.upper[j]) return "bound dual on an unbounded variable";
      if (solution.primal[j] != *problem.upper[j]) return "bound dual on a slack bound";
      dual_objective += *problem.upper[j] * w;
    }
    reduced[j] -= w;
    if (reduced[j] > 0) return "dual constraint violated for variable " + std::to_string(j);
    if (solution.primal[j] > 0 && reduced[j] != 0) return "basic variable with nonzero reduced cost";
  }
  if (dual_objective != primal_objective) return "primal and dual objectives differ";
  return std::nullopt;
}

}  // namespace rfot::testing
