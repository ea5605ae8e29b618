#pragma once

#include <cstddef>
#include <vector>

#include "rfot/lp.hpp"
#include "rfot/model.hpp"

namespace rfot {

struct SolverOptions {
  Limits limits;
  LpObserver observer;  // sees every LP built and its solution
};

enum class TrMode { kScenarioEnumeration, kCompactColumnGeneration };

const char* to_string(TrMode mode);

struct ScenarioDual {
  Scenario scenario;
  Rational value;
};

struct TrSolveResult {
  TemporallyRepeatedFlow flow;
  Rational robust_value;
  // Flow value the adversary destroys: lambda, or Gamma*gamma_0 + sum gamma_e.
  Rational loss;
  TrMode mode = TrMode::kScenarioEnumeration;
  // Capacity-row multipliers alpha_e, indexed by edge (zero for uncapacitated edges).
  std::vector<Rational> capacity_duals;
  // Scenario-row multipliers beta_z (enumeration mode, nonzero entries only).
  std::vector<ScenarioDual> scenario_duals;
  // Delay-row multipliers beta_e, indexed by edge (compact mode only).
  std::vector<Rational> delay_duals;
  std::size_t master_solves = 0;
};

struct CapacityDual {
  EdgeIndex edge = 0;
  Time time = 0;
  Scenario scenario;
  Rational value;
};

struct GeneralSolveResult {
  TripleSolution solution;
  Rational robust_value;
  Rational loss;
  // Number of distinct paths carrying flow.
  std::size_t support_paths = 0;
  std::vector<CapacityDual> capacity_duals;  // nonzero alpha_e^t(z)
  std::vector<ScenarioDual> scenario_duals;  // nonzero beta_z
};

// Path LP over all simple paths with tau(P) < T and one loss row per
// scenario, using capped delays. Valid for every instance.
TrSolveResult solve_tr_exact(const Instance& inst, const SolverOptions& options = {});

// Column generation on the compact reformulation. Requires finite delays
// and the T-bounded path length property; throws PreconditionError naming
// the offending edge or (path, scenario) otherwise.
TrSolveResult solve_tr_compact(const Instance& inst, const SolverOptions& options = {});

TrSolveResult solve_tr(const Instance& inst, TrMode mode, const SolverOptions& options = {});

// Time-expanded LP over unit dispatch intervals, one capacity row per
// (edge, time, scenario).
GeneralSolveResult solve_general(const Instance& inst, const SolverOptions& options = {});

// Optimum without uncertainty: solve_general with Gamma = 0.
Rational nominal_optimum(const Instance& inst, const SolverOptions& options = {});

}  // namespace rfot
