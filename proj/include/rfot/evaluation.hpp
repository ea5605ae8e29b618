#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rfot/model.hpp"

namespace rfot {

// Flow arriving at d by T under z: sum over triples of
// rate * |[a, b) ∩ [0, max{0, T - tau(P) - Delta_z(P)})|.
Rational value_under_scenario(const TripleSolution& sol, const Scenario& z,
                              const Instance& inst);

struct AdversaryReport {
  Scenario worst_scenario;
  Rational robust_value;
  std::vector<std::pair<Scenario, Rational>> per_scenario;  // effective scenarios, on request
};

struct EvaluationOptions {
  Limits limits;
  bool record_all = false;
};

// Exact minimum over all scenarios. Scenarios are enumerated as subsets of
// the edges with positive delay (any other scenario has the value of its
// intersection with them); among minimizers the lexicographically smallest
// such subset is reported.
AdversaryReport robust_value(const TripleSolution& sol, const Instance& inst,
                             const EvaluationOptions& options = {});

// Same for a temporally repeated flow, using capped delays:
// sum_P x_P (T - tau(P) - min{Delta_z(P), T - tau(P)}).
AdversaryReport robust_value_tr(const TemporallyRepeatedFlow& flow, const Instance& inst,
                                const EvaluationOptions& options = {});

// The Gamma edges with the largest Delta_e * load_e (positive ones only,
// ties to the smaller edge index). Exact for T-bounded instances with
// finite delays, which is required (PreconditionError otherwise).
Scenario greedy_adversary_tr(const TemporallyRepeatedFlow& flow, const Instance& inst,
                             const Limits& limits = {});

struct Violation {
  EdgeIndex edge = 0;
  Time time = 0;
  Scenario scenario;
  Rational load;
  Rational capacity;
};

// "violation e=<eid> t=<int> z=<eid,...> load=<rat> u=<rat>"
std::string format_violation(const Violation& v, const Instance& inst);

// Checks every scenario, every edge and every integer t in [0, T); returns
// the first violation in (scenario, edge, time) order.
std::optional<Violation> verify_feasibility(const TripleSolution& sol, const Instance& inst,
                                            const Limits& limits = {});

// Rate `rate` applies from `breakpoint` up to the next breakpoint.
struct FlowSegment {
  Rational breakpoint;
  Rational rate;
};

// Per path a step function; breakpoints strictly increase, start at >= 0,
// and the last segment has rate 0 at a breakpoint <= T.
struct PiecewiseConstantFlow {
  std::map<Path, std::vector<FlowSegment>> paths;
};

std::vector<std::string> validate_piecewise(const PiecewiseConstantFlow& flow,
                                            const Instance& inst);

// Averages every path's rate over each unit interval [a, a+1) of [0, T);
// zero intervals are dropped and equal neighbours merged.
TripleSolution discretize(const PiecewiseConstantFlow& flow, const Instance& inst);

// Robust value of a piecewise constant flow by direct integration.
AdversaryReport robust_value_piecewise(const PiecewiseConstantFlow& flow, const Instance& inst,
                                       const EvaluationOptions& options = {});

struct PiecewiseViolation {
  EdgeIndex edge = 0;
  Rational time;
  Scenario scenario;
  Rational load;
  Rational capacity;
};

// Capacity check at every real time in [0, T), piece by piece.
std::optional<PiecewiseViolation> verify_piecewise_feasibility(
    const PiecewiseConstantFlow& flow, const Instance& inst, const Limits& limits = {});

}  // namespace rfot
