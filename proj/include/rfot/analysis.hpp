#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rfot/model.hpp"
#include "rfot/solvers.hpp"

namespace rfot {

struct TBoundedReport {
  bool t_bounded = true;
  // Witness when not T-bounded: a path and a scenario that delays it past T.
  std::optional<Path> path;
  std::optional<Scenario> scenario;
};

// Brute force over simple s-d paths: tau(P) plus its Gamma largest delays
// must not exceed T.
TBoundedReport check_t_bounded(const Instance& inst, const Limits& limits = {});

// Closed interval [left, right].
struct Interval {
  Time left = 0;
  Time right = 0;
  auto operator<=>(const Interval&) const = default;
};

// Maximum set of pairwise disjoint closed intervals (touching counts as
// intersecting). Sweeps right to left, always taking the interval with the
// rightmost left endpoint. Returns indices into `intervals`.
std::vector<std::size_t> greedy_stable_set(const std::vector<Interval>& intervals);

struct EdgeCoverage {
  EdgeIndex edge = 0;
  // One interval [tau^{<e}(P), T - tau^{>=e}(P)] per path through e with tau(P) <= T.
  std::vector<Interval> intervals;
  std::size_t k = 0;
  // Left endpoints chosen by the greedy sweep; they cover every interval.
  std::vector<Time> witnesses;
};

struct CoverageReport {
  std::size_t k = 1;
  std::vector<EdgeCoverage> edges;  // indexed by edge
};

CoverageReport compute_k(const Instance& inst, const Limits& limits = {});

struct EtaReport {
  Rational eta = 1;
  std::optional<Path> path;
  std::optional<Scenario> scenario;
};

EtaReport compute_eta(const Instance& inst, const Limits& limits = {});

// f^OPT / f^OPT_TR, which may be infinite.
struct GapValue {
  bool infinite = false;
  Rational ratio = 1;
};

std::string to_string(const GapValue& gap);

struct GapReport {
  Rational tr_optimum;
  Rational general_optimum;
  GapValue gap;
};

// Both optima zero gives gap 1; only the TR optimum zero gives an infinite gap.
GapReport optimality_gap(const Instance& inst, const SolverOptions& options = {});

struct AsymptoticBound {
  Rational lambda_star;    // Gamma * max_e Delta_e u_e
  Rational nominal_value;  // F*(T)
  // F*/(F* - lambda*); empty when F* <= lambda*.
  std::optional<Rational> bound;
};

// Throws PreconditionError for an infinite delay or capacity.
AsymptoticBound asymptotic_bound(const Instance& inst, const SolverOptions& options = {});

struct AnalysisReport {
  TBoundedReport t_bounded;
  CoverageReport coverage;
  EtaReport eta;
  std::optional<GapReport> gap;
  std::optional<Rational> bound;
};

// The asymptotic bound is reported when it is defined (finite data and
// F* > lambda*); the gap only when requested.
AnalysisReport analyze(const Instance& inst, bool with_gap, const SolverOptions& options = {});

// "report t_bounded=<bool> k=<int> eta=<rat> gap=<rat|inf|na> bound=<rat|na>"
std::string format_report(const AnalysisReport& report);

}  // namespace rfot
