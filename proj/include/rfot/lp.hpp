#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rfot/errors.hpp"
#include "rfot/rational.hpp"

namespace rfot {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LpTerm {
  std::size_t variable;
  Rational coefficient;
};

struct LpConstraint {
  std::vector<LpTerm> terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  std::string name;
};

// max c^T x  s.t.  rows,  0 <= x <= upper  (upper optional per variable).
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<std::optional<Rational>> upper;
  std::vector<std::string> variable_names;
  std::vector<LpConstraint> constraints;

  std::size_t add_variable(Rational cost, std::string name = {},
                           std::optional<Rational> upper_bound = {});
  // Throws std::out_of_range for an unknown variable.
  std::size_t add_constraint(std::vector<LpTerm> terms, Relation relation, Rational rhs,
                             std::string name = {});

  std::size_t num_variables() const { return objective.size(); }
  std::size_t nonzeros() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> primal;
  // One multiplier per constraint: >= 0 for <=, <= 0 for >=, free for =.
  std::vector<Rational> duals;
  // Multipliers of the finite upper bounds (zero where there is none).
  std::vector<Rational> bound_duals;
  Rational objective;
  std::size_t pivots = 0;

  // b^T y + upper^T w. Equals `objective` at optimality.
  Rational dual_objective(const LpProblem& problem) const;
};

// Exact two-phase primal simplex on a sparse rational tableau with Bland's
// rule. Throws CapExceeded when the constraint matrix has more than
// limits.max_lp_nonzeros entries.
LpSolution solve(const LpProblem& problem, const Limits& limits = {});

// Called with every LP a solver builds, after it is solved.
using LpObserver = std::function<void(const LpProblem&, const LpSolution&)>;

// One constraint per line, exact rationals.
std::string format_lp(const LpProblem& problem);

}  // namespace rfot
