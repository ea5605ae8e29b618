#include "rfot/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "rfot/paths.hpp"

namespace rfot {

TBoundedReport check_t_bounded(const Instance& inst, const Limits& limits) {
  TBoundedReport report;
  for (const Path& path : enumerate_paths(inst, std::nullopt, limits)) {
    // The Gamma largest delays on the path, infinite first, ties to the
    // smaller edge index.
    std::vector<EdgeIndex> delayable;
    for (EdgeIndex e : path.edges) {
      const Delay& d = inst.edges[e].delay;
      if (d.is_infinite() || d.value() > 0) delayable.push_back(e);
    }
    std::stable_sort(delayable.begin(), delayable.end(), [&](EdgeIndex a, EdgeIndex b) {
      const Delay& da = inst.edges[a].delay;
      const Delay& db = inst.edges[b].delay;
      if (da.is_infinite() != db.is_infinite()) return da.is_infinite();
      if (da.is_infinite()) return a < b;
      return da.value() != db.value() ? da.value() > db.value() : a < b;
    });
    if (static_cast<std::int64_t>(delayable.size()) > inst.budget) {
      delayable.resize(static_cast<std::size_t>(inst.budget));
    }
    Scenario z(delayable);
    const Delay d = scenario_delay(path, z, inst);
    if (d.is_infinite() || travel_time(path, inst) + d.value() > inst.horizon) {
      report.t_bounded = false;
      report.path = path;
      report.scenario = std::move(z);
      return report;
    }
  }
  return report;
}

std::vector<std::size_t> greedy_stable_set(const std::vector<Interval>& intervals) {
  std::vector<std::size_t> order(intervals.size());
  std::iota(order.begin(), order.end(), 0);
  // Rightmost left endpoint first.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return intervals[a].left > intervals[b].left;
  });
  std::vector<std::size_t> chosen;
  for (std::size_t idx : order) {
    // Every remaining interval starts at or before the last chosen left
    // endpoint, so it intersects the chosen one iff it reaches that point.
    if (!chosen.empty() && intervals[idx].right >= intervals[chosen.back()].left) continue;
    chosen.push_back(idx);
  }
  return chosen;
}

CoverageReport compute_k(const Instance& inst, const Limits& limits) {
  CoverageReport report;
  report.edges.resize(inst.edges.size());
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) report.edges[e].edge = e;
  for (const Path& path : enumerate_paths(inst, inst.horizon, limits)) {
    const PathMetrics m = path_metrics(path, inst);
    for (std::size_t pos = 0; pos < path.edges.size(); ++pos) {
      report.edges[path.edges[pos]].intervals.push_back(
          Interval{m.prefix_tau[pos], inst.horizon - m.suffix_tau[pos]});
    }
  }
  std::size_t k = 0;
  for (auto& edge : report.edges) {
    const auto chosen = greedy_stable_set(edge.intervals);
    edge.k = chosen.size();
    for (auto idx : chosen) edge.witnesses.push_back(edge.intervals[idx].left);
    std::sort(edge.witnesses.begin(), edge.witnesses.end());
    k = std::max(k, edge.k);
  }
  // An instance without s-d paths is vacuously 1-coverable.
  report.k = std::max<std::size_t>(k, 1);
  return report;
}

EtaReport compute_eta(const Instance& inst, const Limits& limits) {
  EtaReport report;
  for (const Path& path : enumerate_paths(inst, inst.horizon - 1, limits)) {
    const Time window = inst.horizon - travel_time(path, inst);
    std::vector<EdgeIndex> on_path;
    for (EdgeIndex e : path.edges) {
      const Delay& d = inst.edges[e].delay;
      if (d.is_finite() && d.value() > 0) on_path.push_back(e);
    }
    // Infinite delays always cut the whole window, so only finite ones can
    // leave a positive residual.
    if (count_scenarios(on_path.size(), inst.budget) > limits.max_scenarios) {
      throw CapExceeded("too many on-path scenarios while computing eta");
    }
    for (const Scenario& z : ScenarioSet(on_path, inst.budget)) {
      const Delay d = scenario_delay(path, z, inst);
      if (d.is_infinite() || d.value() >= window || d.value() == 0) continue;
      const Rational ratio = make_rational(window, window - d.value());
      if (ratio > report.eta) {
        report.eta = ratio;
        report.path = path;
        report.scenario = z;
      }
    }
  }
  return report;
}

std::string to_string(const GapValue& gap) {
  return gap.infinite ? "inf" : to_string(gap.ratio);
}

GapReport optimality_gap(const Instance& inst, const SolverOptions& options) {
  GapReport report;
  report.tr_optimum = solve_tr_exact(inst, options).robust_value;
  report.general_optimum = solve_general(inst, options).robust_value;
  if (report.tr_optimum > 0) {
    report.gap.ratio = report.general_optimum / report.tr_optimum;
  } else if (report.general_optimum > 0) {
    report.gap.infinite = true;
  } else {
    report.gap.ratio = 1;
  }
  return report;
}

AsymptoticBound asymptotic_bound(const Instance& inst, const SolverOptions& options) {
  AsymptoticBound out;
  Rational worst = 0;
  for (const auto& e : inst.edges) {
    if (e.delay.is_infinite() || e.capacity.is_infinite()) {
      throw PreconditionError("asymptotic bound needs finite delays and capacities; edge " +
                              e.id + " is unbounded");
    }
    worst = std::max<Rational>(worst, Rational(e.delay.value()) * e.capacity.value());
  }
  out.lambda_star = inst.budget * worst;
  out.nominal_value = nominal_optimum(inst, options);
  if (out.nominal_value > out.lambda_star) {
    out.bound = out.nominal_value / (out.nominal_value - out.lambda_star);
  }
  return out;
}

AnalysisReport analyze(const Instance& inst, bool with_gap, const SolverOptions& options) {
  AnalysisReport report;
  report.t_bounded = check_t_bounded(inst, options.limits);
  report.coverage = compute_k(inst, options.limits);
  report.eta = compute_eta(inst, options.limits);
  if (with_gap) report.gap = optimality_gap(inst, options);
  const bool finite = std::all_of(inst.edges.begin(), inst.edges.end(), [](const Edge& e) {
    return e.delay.is_finite() && e.capacity.is_finite();
  });
  if (finite) report.bound = asymptotic_bound(inst, options).bound;
  return report;
}

std::string format_report(const AnalysisReport& report) {
  return std::string("report t_bounded=") + (report.t_bounded.t_bounded ? "true" : "false") +
         " k=" + std::to_string(report.coverage.k) + " eta=" + to_string(report.eta.eta) +
         " gap=" + (report.gap ? to_string(report.gap->gap) : std::string("na")) +
         " bound=" + (report.bound ? to_string(*report.bound) : std::string("na"));
}

}  // namespace rfot
