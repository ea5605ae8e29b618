#include "rfot/evaluation.hpp"

#include <algorithm>

#include "rfot/analysis.hpp"
#include "rfot/paths.hpp"

namespace rfot {
namespace {

void require_valid_solution(const TripleSolution& sol, const Instance& inst) {
  const auto problems = validate_solution(sol, inst);
  if (problems.empty()) return;
  std::string msg = "invalid solution:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw PreconditionError(msg);
}

void require_valid_flow(const TemporallyRepeatedFlow& flow, const Instance& inst) {
  const auto problems = validate_tr_flow(flow, inst);
  if (problems.empty()) return;
  std::string msg = "invalid temporally repeated flow:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw PreconditionError(msg);
}

// Arrival cutoff for flow dispatched into `path` under z.
Time cutoff(const Path& path, const Scenario& z, const Instance& inst) {
  const Delay d = scenario_delay(path, z, inst);
  if (d.is_infinite()) return 0;
  return std::max<Time>(0, inst.horizon - travel_time(path, inst) - d.value());
}

template <typename ValueFn>
AdversaryReport minimize(const Instance& inst, const EvaluationOptions& options, ValueFn value) {
  AdversaryReport report;
  bool first = true;
  for (const Scenario& z : effective_scenarios(inst, options.limits)) {
    Rational v = value(z);
    if (options.record_all) report.per_scenario.emplace_back(z, v);
    if (first || v < report.robust_value ||
        (v == report.robust_value && z < report.worst_scenario)) {
      report.robust_value = v;
      report.worst_scenario = z;
      first = false;
    }
  }
  return report;
}

// Integral of a step function over [from, upto).
Rational integrate(const std::vector<FlowSegment>& segments, const Rational& from,
                   const Rational& upto) {
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < segments.size(); ++k) {
    const Rational lo = std::max<Rational>(segments[k].breakpoint, from);
    const Rational hi = std::min<Rational>(segments[k + 1].breakpoint, upto);
    if (hi > lo) total += segments[k].rate * (hi - lo);
  }
  return total;
}

}  // namespace

Rational value_under_scenario(const TripleSolution& sol, const Scenario& z,
                              const Instance& inst) {
  Rational total = 0;
  for (const auto& t : sol.triples) {
    const Time c = cutoff(t.path, z, inst);
    const Time len = std::max<Time>(0, std::min(t.end, c) - t.start);
    if (len > 0) total += t.rate * len;
  }
  return total;
}

AdversaryReport robust_value(const TripleSolution& sol, const Instance& inst,
                             const EvaluationOptions& options) {
  require_valid_solution(sol, inst);
  return minimize(inst, options,
                  [&](const Scenario& z) { return value_under_scenario(sol, z, inst); });
}

AdversaryReport robust_value_tr(const TemporallyRepeatedFlow& flow, const Instance& inst,
                                const EvaluationOptions& options) {
  require_valid_flow(flow, inst);
  return minimize(inst, options, [&](const Scenario& z) {
    Rational total = 0;
    for (const auto& [path, rate] : flow.rates) {
      const Time window = inst.horizon - travel_time(path, inst);
      total += rate * (window - capped_delay(path, z, inst));
    }
    return total;
  });
}

Scenario greedy_adversary_tr(const TemporallyRepeatedFlow& flow, const Instance& inst,
                             const Limits& limits) {
  require_valid_flow(flow, inst);
  for (const auto& e : inst.edges) {
    if (e.delay.is_infinite()) {
      throw PreconditionError("greedy adversary needs finite delays; edge " + e.id +
                              " has infinite delay");
    }
  }
  if (!check_t_bounded(inst, limits).t_bounded) {
    throw PreconditionError("greedy adversary needs the T-bounded path length property");
  }
  std::vector<std::pair<Rational, EdgeIndex>> weights;
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
    Rational w = edge_load(flow, e) * inst.edges[e].delay.value();
    if (w > 0) weights.emplace_back(std::move(w), e);
  }
  std::stable_sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<EdgeIndex> chosen;
  for (const auto& [w, e] : weights) {
    if (static_cast<std::int64_t>(chosen.size()) >= inst.budget) break;
    chosen.push_back(e);
  }
  return Scenario(std::move(chosen));
}

std::string format_violation(const Violation& v, const Instance& inst) {
  return "violation e=" + inst.edges.at(v.edge).id + " t=" + std::to_string(v.time) +
         " z=" + format_scenario(v.scenario, inst) + " load=" + to_string(v.load) +
         " u=" + to_string(v.capacity);
}

std::optional<Violation> verify_feasibility(const TripleSolution& sol, const Instance& inst,
                                            const Limits& limits) {
  require_valid_solution(sol, inst);
  const Time T = inst.horizon;

  // For each edge: (triple, position of the edge on the triple's path).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> users(inst.edges.size());
  for (std::size_t k = 0; k < sol.triples.size(); ++k) {
    const auto& edges = sol.triples[k].path.edges;
    for (std::size_t pos = 0; pos < edges.size(); ++pos) users[edges[pos]].emplace_back(k, pos);
  }

  std::vector<std::pair<Time, Rational>> events;
  for (const Scenario& z : effective_scenarios(inst, limits)) {
    for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
      const Capacity& u = inst.edges[e].capacity;
      if (u.is_infinite() || users[e].empty()) continue;
      // A triple occupies e during [a + offset, b + offset); the load is a
      // step function whose steps sit on integers.
      events.clear();
      for (const auto& [k, pos] : users[e]) {
        const Triple& t = sol.triples[k];
        const auto offset = entry_offset(t.path, pos, z, inst);
        if (!offset || t.start + *offset >= T) continue;
        events.emplace_back(t.start + *offset, t.rate);
        events.emplace_back(t.end + *offset, -t.rate);
      }
      std::sort(events.begin(), events.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      Rational load = 0;
      for (std::size_t i = 0; i < events.size();) {
        const Time at = events[i].first;
        if (at >= T) break;
        for (; i < events.size() && events[i].first == at; ++i) load += events[i].second;
        if (load > u.value()) return Violation{e, at, z, load, u.value()};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::string> validate_piecewise(const PiecewiseConstantFlow& flow,
                                            const Instance& inst) {
  std::vector<std::string> out;
  for (const auto& [path, segments] : flow.paths) {
    const std::string tag = "path " + format_path(path, inst) + ": ";
    if (auto err = path_error(path, inst)) out.push_back(tag + *err);
    if (segments.empty()) continue;
    if (segments.front().breakpoint < 0) out.push_back(tag + "support starts before 0");
    for (std::size_t k = 0; k < segments.size(); ++k) {
      if (segments[k].rate < 0) out.push_back(tag + "negative rate");
      if (k > 0 && segments[k].breakpoint <= segments[k - 1].breakpoint) {
        out.push_back(tag + "breakpoints must strictly increase");
      }
    }
    if (segments.back().rate != 0) out.push_back(tag + "last segment must close with rate 0");
    if (segments.back().breakpoint > inst.horizon) out.push_back(tag + "support exceeds [0, T)");
  }
  return out;
}

TripleSolution discretize(const PiecewiseConstantFlow& flow, const Instance& inst) {
  if (const auto problems = validate_piecewise(flow, inst); !problems.empty()) {
    throw PreconditionError("invalid piecewise constant flow: " + problems.front());
  }
  TripleSolution out;
  for (const auto& [path, segments] : flow.paths) {
    std::optional<Triple> open;
    for (Time a = 0; a < inst.horizon; ++a) {
      const Rational avg = integrate(segments, Rational(a), Rational(a + 1));
      if (open && avg == open->rate && open->end == a) {
        open->end = a + 1;
        continue;
      }
      if (open) out.triples.push_back(std::move(*open));
      open.reset();
      if (avg > 0) open = Triple{path, avg, a, a + 1};
    }
    if (open) out.triples.push_back(std::move(*open));
  }
  return out;
}

AdversaryReport robust_value_piecewise(const PiecewiseConstantFlow& flow, const Instance& inst,
                                       const EvaluationOptions& options) {
  if (const auto problems = validate_piecewise(flow, inst); !problems.empty()) {
    throw PreconditionError("invalid piecewise constant flow: " + problems.front());
  }
  return minimize(inst, options, [&](const Scenario& z) {
    Rational total = 0;
    for (const auto& [path, segments] : flow.paths) {
      total += integrate(segments, Rational(0), Rational(cutoff(path, z, inst)));
    }
    return total;
  });
}

std::optional<PiecewiseViolation> verify_piecewise_feasibility(
    const PiecewiseConstantFlow& flow, const Instance& inst, const Limits& limits) {
  if (const auto problems = validate_piecewise(flow, inst); !problems.empty()) {
    throw PreconditionError("invalid piecewise constant flow: " + problems.front());
  }
  const Rational horizon(inst.horizon);
  std::vector<std::pair<Rational, Rational>> events;
  for (const Scenario& z : effective_scenarios(inst, limits)) {
    for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
      const Capacity& u = inst.edges[e].capacity;
      if (u.is_infinite()) continue;
      events.clear();
      for (const auto& [path, segments] : flow.paths) {
        const auto it = std::find(path.edges.begin(), path.edges.end(), e);
        if (it == path.edges.end()) continue;
        const auto offset = entry_offset(path, static_cast<std::size_t>(it - path.edges.begin()), z, inst);
        if (!offset) continue;
        Rational previous = 0;
        for (const auto& seg : segments) {
          events.emplace_back(seg.breakpoint + *offset, seg.rate - previous);
          previous = seg.rate;
        }
      }
      std::sort(events.begin(), events.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      Rational load = 0;
      for (std::size_t i = 0; i < events.size();) {
        const Rational at = events[i].first;
        if (at >= horizon) break;
        for (; i < events.size() && events[i].first == at; ++i) load += events[i].second;
        if (load > u.value()) return PiecewiseViolation{e, at, z, load, u.value()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace rfot
