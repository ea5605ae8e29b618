#include "rfot/solvers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rfot/analysis.hpp"
#include "rfot/paths.hpp"

namespace rfot {

const char* to_string(TrMode mode) {
  return mode == TrMode::kScenarioEnumeration ? "exact" : "compact";
}

namespace {

LpSolution run_lp(const LpProblem& lp, const SolverOptions& options, const char* what) {
  LpSolution sol = solve(lp, options.limits);
  if (options.observer) options.observer(lp, sol);
  if (sol.status == LpStatus::kUnbounded) {
    throw PreconditionError(std::string(what) +
                            ": LP unbounded (an s-d path has no finite capacity)");
  }
  if (sol.status != LpStatus::kOptimal) {
    throw std::logic_error(std::string(what) + ": LP unexpectedly " + to_string(sol.status));
  }
  return sol;
}

std::vector<LpTerm> unit_terms(const std::vector<std::size_t>& vars) {
  std::vector<LpTerm> terms;
  terms.reserve(vars.size());
  for (auto v : vars) terms.push_back(LpTerm{v, Rational(1)});
  return terms;
}

// Dijkstra from s with nonnegative rational edge costs; returns the
// cheapest s-d path and its cost, or nothing if d is unreachable.
std::optional<std::pair<Path, Rational>> cheapest_path(const Instance& inst,
                                                        const std::vector<Rational>& cost) {
  const std::size_t n = inst.vertices.size();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::optional<EdgeIndex>> pred(n);
  std::vector<bool> done(n, false);
  dist[inst.source] = Rational(0);
  for (;;) {
    std::optional<VertexIndex> best;
    for (VertexIndex v = 0; v < n; ++v) {
      if (done[v] || !dist[v]) continue;
      if (!best || *dist[v] < *dist[*best]) best = v;
    }
    if (!best) break;
    const VertexIndex v = *best;
    done[v] = true;
    if (v == inst.sink) break;
    for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
      const Edge& edge = inst.edges[e];
      if (edge.tail != v || done[edge.head]) continue;
      Rational candidate = *dist[v] + cost[e];
      if (!dist[edge.head] || candidate < *dist[edge.head]) {
        dist[edge.head] = candidate;
        pred[edge.head] = e;
      }
    }
  }
  if (!dist[inst.sink]) return std::nullopt;
  Path path;
  for (VertexIndex v = inst.sink; v != inst.source;) {
    const EdgeIndex e = *pred[v];
    path.edges.push_back(e);
    v = inst.edges[e].tail;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return std::make_pair(std::move(path), *dist[inst.sink]);
}

}  // namespace

TrSolveResult solve_tr_exact(const Instance& inst, const SolverOptions& options) {
  require_valid(inst);
  const Time T = inst.horizon;
  const auto paths = enumerate_paths(inst, T - 1, options.limits);

  LpProblem lp;
  for (const auto& p : paths) lp.add_variable(Rational(T - travel_time(p, inst)), "x[" + format_path(p, inst) + "]");
  const std::size_t lambda = lp.add_variable(Rational(-1), "lambda");

  std::vector<std::optional<std::size_t>> capacity_row(inst.edges.size());
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
    const Capacity& u = inst.edges[e].capacity;
    if (u.is_infinite()) continue;
    std::vector<std::size_t> vars;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (paths[p].contains(e)) vars.push_back(p);
    }
    if (vars.empty()) continue;
    capacity_row[e] = lp.add_constraint(unit_terms(vars), Relation::kLessEqual, u.value(),
                                        "cap[" + inst.edges[e].id + "]");
  }

  // Loss rows; scenarios producing the same row share it.
  std::map<std::vector<std::pair<std::size_t, Time>>, std::size_t> seen;
  std::vector<std::pair<std::size_t, Scenario>> scenario_rows;
  for (const Scenario& z : effective_scenarios(inst, options.limits)) {
    std::vector<std::pair<std::size_t, Time>> key;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      const Time cut = capped_delay(paths[p], z, inst);
      if (cut > 0) key.emplace_back(p, cut);
    }
    if (key.empty() || seen.count(key)) continue;
    std::vector<LpTerm> terms;
    for (const auto& [p, cut] : key) terms.push_back(LpTerm{p, Rational(cut)});
    terms.push_back(LpTerm{lambda, Rational(-1)});
    const auto row = lp.add_constraint(std::move(terms), Relation::kLessEqual, Rational(0),
                                       "loss[" + format_scenario(z, inst) + "]");
    seen.emplace(std::move(key), row);
    scenario_rows.emplace_back(row, z);
  }

  const LpSolution sol = run_lp(lp, options, "solve_tr_exact");
  TrSolveResult result;
  result.mode = TrMode::kScenarioEnumeration;
  result.master_solves = 1;
  result.robust_value = sol.objective;
  result.loss = sol.primal[lambda];
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (sol.primal[p] > 0) result.flow.rates.emplace(paths[p], sol.primal[p]);
  }
  result.capacity_duals.assign(inst.edges.size(), Rational(0));
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
    if (capacity_row[e]) result.capacity_duals[e] = sol.duals[*capacity_row[e]];
  }
  for (const auto& [row, z] : scenario_rows) {
    if (sol.duals[row] != 0) result.scenario_duals.push_back(ScenarioDual{z, sol.duals[row]});
  }
  return result;
}

TrSolveResult solve_tr_compact(const Instance& inst, const SolverOptions& options) {
  require_valid(inst);
  for (const auto& e : inst.edges) {
    if (e.delay.is_infinite()) {
      throw PreconditionError("compact mode needs finite delays; edge " + e.id +
                              " has infinite delay");
    }
  }
  const auto bounded = check_t_bounded(inst, options.limits);
  if (!bounded.t_bounded) {
    throw PreconditionError("compact mode needs the T-bounded path length property; path " +
                            format_path(*bounded.path, inst) + " under scenario {" +
                            format_scenario(*bounded.scenario, inst) + "} exceeds T");
  }

  const Time T = inst.horizon;
  const std::size_t m = inst.edges.size();
  std::vector<Path> pool;
  {
    std::vector<Rational> tau_cost(m);
    for (EdgeIndex e = 0; e < m; ++e) tau_cost[e] = inst.edges[e].travel_time;
    if (auto first = cheapest_path(inst, tau_cost); first && first->second < T) {
      pool.push_back(std::move(first->first));
    }
  }

  TrSolveResult result;
  result.mode = TrMode::kCompactColumnGeneration;
  for (;;) {
    LpProblem lp;
    for (const auto& p : pool) {
      lp.add_variable(Rational(T - travel_time(p, inst)), "x[" + format_path(p, inst) + "]");
    }
    const std::size_t gamma0 = lp.add_variable(Rational(-inst.budget), "gamma0");
    const std::size_t first_gamma = lp.num_variables();
    for (EdgeIndex e = 0; e < m; ++e) lp.add_variable(Rational(-1), "gamma[" + inst.edges[e].id + "]");

    std::vector<std::optional<std::size_t>> capacity_row(m);
    std::vector<std::size_t> delay_row(m);
    for (EdgeIndex e = 0; e < m; ++e) {
      std::vector<std::size_t> vars;
      for (std::size_t p = 0; p < pool.size(); ++p) {
        if (pool[p].contains(e)) vars.push_back(p);
      }
      const Edge& edge = inst.edges[e];
      if (edge.capacity.is_finite()) {
        capacity_row[e] = lp.add_constraint(unit_terms(vars), Relation::kLessEqual,
                                            edge.capacity.value(), "cap[" + edge.id + "]");
      }
      // Delta_e * load_e - gamma_0 - gamma_e <= 0
      std::vector<LpTerm> terms;
      for (auto v : vars) terms.push_back(LpTerm{v, Rational(edge.delay.value())});
      terms.push_back(LpTerm{gamma0, Rational(-1)});
      terms.push_back(LpTerm{first_gamma + e, Rational(-1)});
      delay_row[e] = lp.add_constraint(std::move(terms), Relation::kLessEqual, Rational(0),
                                       "delay[" + edge.id + "]");
    }

    const LpSolution sol = run_lp(lp, options, "solve_tr_compact");
    ++result.master_solves;

    std::vector<Rational> alpha(m, Rational(0));
    std::vector<Rational> beta(m, Rational(0));
    std::vector<Rational> price(m);
    for (EdgeIndex e = 0; e < m; ++e) {
      if (capacity_row[e]) alpha[e] = sol.duals[*capacity_row[e]];
      beta[e] = sol.duals[delay_row[e]];
      price[e] = alpha[e] + beta[e] * inst.edges[e].delay.value() + inst.edges[e].travel_time;
    }

    auto column = cheapest_path(inst, price);
    if (column && column->second < T) {
      if (std::find(pool.begin(), pool.end(), column->first) != pool.end()) {
        throw std::logic_error("pricing returned a path already in the master");
      }
      pool.push_back(std::move(column->first));
      continue;
    }

    result.robust_value = sol.objective;
    result.loss = inst.budget * sol.primal[gamma0];
    for (EdgeIndex e = 0; e < m; ++e) result.loss += sol.primal[first_gamma + e];
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (sol.primal[p] > 0) result.flow.rates.emplace(pool[p], sol.primal[p]);
    }
    result.capacity_duals = std::move(alpha);
    result.delay_duals = std::move(beta);
    return result;
  }
}

TrSolveResult solve_tr(const Instance& inst, TrMode mode, const SolverOptions& options) {
  return mode == TrMode::kScenarioEnumeration ? solve_tr_exact(inst, options)
                                              : solve_tr_compact(inst, options);
}

GeneralSolveResult solve_general(const Instance& inst, const SolverOptions& options) {
  require_valid(inst);
  const Time T = inst.horizon;
  const auto paths = enumerate_paths(inst, T - 1, options.limits);
  const auto scenarios = effective_scenarios(inst, options.limits);

  // x_P^i for 0 <= i < T - tau(P) live at base[p] + i.
  LpProblem lp;
  std::vector<std::size_t> base(paths.size());
  std::vector<Time> window(paths.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    window[p] = T - travel_time(paths[p], inst);
    base[p] = lp.num_variables();
    for (Time i = 0; i < window[p]; ++i) {
      lp.add_variable(Rational(1), "x[" + format_path(paths[p], inst) + "][" + std::to_string(i) + "]");
    }
  }
  const std::size_t lambda = lp.add_variable(Rational(-1), "lambda");

  // (edge, position on path) pairs per edge.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> users(inst.edges.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t pos = 0; pos < paths[p].edges.size(); ++pos) {
      users[paths[p].edges[pos]].emplace_back(p, pos);
    }
  }

  struct RowOrigin {
    std::size_t row;
    EdgeIndex edge;
    Time time;
    Scenario scenario;
  };
  std::vector<RowOrigin> capacity_rows;
  std::vector<std::pair<std::size_t, Scenario>> scenario_rows;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> seen_capacity(inst.edges.size());
  std::map<std::vector<std::size_t>, std::size_t> seen_loss;

  for (const Scenario& z : scenarios) {
    for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
      const Capacity& u = inst.edges[e].capacity;
      if (u.is_infinite() || users[e].empty()) continue;
      std::vector<std::vector<std::size_t>> by_time(static_cast<std::size_t>(T));
      for (const auto& [p, pos] : users[e]) {
        const auto offset = entry_offset(paths[p], pos, z, inst);
        if (!offset) continue;
        // Dispatch index i reaches e at t = i + offset.
        for (Time i = 0; i < window[p] && i + *offset < T; ++i) {
          by_time[static_cast<std::size_t>(i + *offset)].push_back(base[p] + static_cast<std::size_t>(i));
        }
      }
      for (Time t = 0; t < T; ++t) {
        auto& vars = by_time[static_cast<std::size_t>(t)];
        if (vars.empty()) continue;
        std::sort(vars.begin(), vars.end());
        if (seen_capacity[e].count(vars)) continue;
        const auto row = lp.add_constraint(
            unit_terms(vars), Relation::kLessEqual, u.value(),
            "cap[" + inst.edges[e].id + "][" + std::to_string(t) + "][" + format_scenario(z, inst) + "]");
        seen_capacity[e].emplace(vars, row);
        capacity_rows.push_back(RowOrigin{row, e, t, z});
      }
    }

    std::vector<std::size_t> lost;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      const Delay d = scenario_delay(paths[p], z, inst);
      const Time first_lost = d.is_infinite() ? 0 : std::max<Time>(0, window[p] - d.value());
      for (Time i = first_lost; i < window[p]; ++i) lost.push_back(base[p] + static_cast<std::size_t>(i));
    }
    if (lost.empty() || seen_loss.count(lost)) continue;
    auto terms = unit_terms(lost);
    terms.push_back(LpTerm{lambda, Rational(-1)});
    const auto row = lp.add_constraint(std::move(terms), Relation::kLessEqual, Rational(0),
                                       "loss[" + format_scenario(z, inst) + "]");
    seen_loss.emplace(std::move(lost), row);
    scenario_rows.emplace_back(row, z);
  }

  const LpSolution sol = run_lp(lp, options, "solve_general");
  GeneralSolveResult result;
  result.robust_value = sol.objective;
  result.loss = sol.primal[lambda];
  for (std::size_t p = 0; p < paths.size(); ++p) {
    bool used = false;
    Time i = 0;
    while (i < window[p]) {
      const Rational& rate = sol.primal[base[p] + static_cast<std::size_t>(i)];
      Time j = i + 1;
      while (j < window[p] && sol.primal[base[p] + static_cast<std::size_t>(j)] == rate) ++j;
      if (rate > 0) {
        result.solution.triples.push_back(Triple{paths[p], rate, i, j});
        used = true;
      }
      i = j;
    }
    result.support_paths += used;
  }
  for (const auto& origin : capacity_rows) {
    if (sol.duals[origin.row] != 0) {
      result.capacity_duals.push_back(
          CapacityDual{origin.edge, origin.time, origin.scenario, sol.duals[origin.row]});
    }
  }
  for (const auto& [row, z] : scenario_rows) {
    if (sol.duals[row] != 0) result.scenario_duals.push_back(ScenarioDual{z, sol.duals[row]});
  }
  return result;
}

Rational nominal_optimum(const Instance& inst, const SolverOptions& options) {
  return solve_general(inst.with_budget(0), options).robust_value;
}

}  // namespace rfot
