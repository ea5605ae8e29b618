#include "rfot/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rfot {

std::size_t LpProblem::add_variable(Rational cost, std::string name,
                                    std::optional<Rational> upper_bound) {
  objective.push_back(std::move(cost));
  upper.push_back(std::move(upper_bound));
  variable_names.push_back(std::move(name));
  return objective.size() - 1;
}

std::size_t LpProblem::add_constraint(std::vector<LpTerm> terms, Relation relation,
                                      Rational rhs, std::string name) {
  for (const auto& t : terms) {
    if (t.variable >= objective.size()) throw std::out_of_range("constraint references unknown variable");
  }
  constraints.push_back(LpConstraint{std::move(terms), relation, std::move(rhs), std::move(name)});
  return constraints.size() - 1;
}

std::size_t LpProblem::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : constraints) {
    for (const auto& t : c.terms) n += (t.coefficient != 0);
  }
  return n;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

Rational LpSolution::dual_objective(const LpProblem& problem) const {
  Rational total = 0;
  for (std::size_t i = 0; i < duals.size(); ++i) total += problem.constraints[i].rhs * duals[i];
  for (std::size_t j = 0; j < bound_duals.size(); ++j) {
    if (problem.upper[j]) total += *problem.upper[j] * bound_duals[j];
  }
  return total;
}

namespace {

using Column = std::uint32_t;
using SparseRow = std::vector<std::pair<Column, Rational>>;

const Rational kZero = 0;

const Rational& coefficient(const SparseRow& row, Column col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, Column c) { return entry.first < c; });
  return (it != row.end() && it->first == col) ? it->second : kZero;
}

// target -= factor * source, both sorted by column.
void subtract_multiple(SparseRow& target, const Rational& factor, const SparseRow& source) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  Rational tmp;
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == target.end() || b->first < a->first) {
      tmp = factor * b->second;
      out.emplace_back(b->first, -tmp);
      ++b;
    } else {
      tmp = factor * b->second;
      a->second -= tmp;
      if (a->second != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

class Tableau {
 public:
  std::vector<SparseRow> rows;
  std::vector<Rational> rhs;
  std::vector<Column> basis;
  std::vector<Rational> reduced;  // c_B B^-1 A_j - c_j; optimal when all >= 0
  std::vector<bool> barred;
  std::size_t pivots = 0;

  void pivot(std::size_t r, Column c) {
    const Rational piv = coefficient(rows[r], c);
    assert(piv != 0);
    if (piv != 1) {
      for (auto& entry : rows[r]) entry.second /= piv;
      rhs[r] /= piv;
    }
    const SparseRow& prow = rows[r];
    Rational factor;
    Rational tmp;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const Rational& a = coefficient(rows[i], c);
      if (a == 0) continue;
      factor = a;
      subtract_multiple(rows[i], factor, prow);
      tmp = factor * rhs[r];
      rhs[i] -= tmp;
    }
    if (reduced[c] != 0) {
      factor = reduced[c];
      for (const auto& [j, v] : prow) {
        tmp = factor * v;
        reduced[j] -= tmp;
      }
    }
    basis[r] = c;
    ++pivots;
  }

  // Bland's rule throughout. Returns false when unbounded.
  bool optimize() {
    for (;;) {
      Column entering = 0;
      bool found = false;
      for (Column j = 0; j < reduced.size(); ++j) {
        if (!barred[j] && reduced[j] < 0) {
          entering = j;
          found = true;
          break;
        }
      }
      if (!found) return true;

      std::size_t leave = rows.size();
      Rational best_ratio;
      Rational ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& a = coefficient(rows[i], entering);
        if (a <= 0) continue;
        ratio = rhs[i] / a;
        if (leave == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, entering);
    }
  }

  void set_objective(const std::vector<Rational>& cost) {
    reduced.assign(cost.size(), Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) reduced[j] = -cost[j];
    Rational tmp;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (const auto& [j, v] : rows[i]) {
        tmp = cb * v;
        reduced[j] += tmp;
      }
    }
  }
};

struct StandardRow {
  SparseRow entries;
  Relation relation;
  Rational rhs;
  bool negated = false;
};

}  // namespace

LpSolution solve(const LpProblem& problem, const Limits& limits) {
  const std::size_t n = problem.num_variables();
  if (problem.nonzeros() > limits.max_lp_nonzeros) {
    throw CapExceeded("LP has " + std::to_string(problem.nonzeros()) +
                      " nonzeros, above the cap of " + std::to_string(limits.max_lp_nonzeros));
  }

  LpSolution result;
  result.primal.assign(n, Rational(0));
  result.duals.assign(problem.constraints.size(), Rational(0));
  result.bound_duals.assign(n, Rational(0));

  // Constraint rows followed by one row per finite upper bound, all with
  // nonnegative right-hand sides.
  std::vector<StandardRow> std_rows;
  std::vector<std::size_t> bound_row_var;
  for (const auto& c : problem.constraints) {
    StandardRow row{{}, c.relation, c.rhs};
    for (const auto& t : c.terms) {
      if (t.coefficient == 0) continue;
      row.entries.emplace_back(static_cast<Column>(t.variable), t.coefficient);
    }
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge repeated variables.
    SparseRow merged;
    for (auto& e : row.entries) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    row.entries = std::move(merged);
    std_rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!problem.upper[j]) continue;
    if (*problem.upper[j] < 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    std_rows.push_back(StandardRow{{{static_cast<Column>(j), Rational(1)}},
                                   Relation::kLessEqual, *problem.upper[j]});
    bound_row_var.push_back(j);
  }
  for (auto& row : std_rows) {
    if (row.rhs < 0) {
      row.negated = true;
      row.rhs = -row.rhs;
      for (auto& e : row.entries) e.second = -e.second;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  const std::size_t m = std_rows.size();
  std::vector<Column> identity_col(m);
  std::vector<bool> is_artificial;
  Column next = static_cast<Column>(n);
  std::vector<std::pair<std::size_t, Column>> surplus_cols;
  for (std::size_t i = 0; i < m; ++i) {
    if (std_rows[i].relation == Relation::kLessEqual) {
      identity_col[i] = next++;
    } else if (std_rows[i].relation == Relation::kGreaterEqual) {
      surplus_cols.emplace_back(i, next++);
    }
  }
  const Column first_artificial = next;
  for (std::size_t i = 0; i < m; ++i) {
    if (std_rows[i].relation != Relation::kLessEqual) identity_col[i] = next++;
  }
  const std::size_t num_cols = next;

  Tableau tab;
  tab.rows.resize(m);
  tab.rhs.resize(m);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    tab.rows[i] = std::move(std_rows[i].entries);
    tab.rhs[i] = std_rows[i].rhs;
    tab.basis[i] = identity_col[i];
  }
  for (const auto& [i, col] : surplus_cols) tab.rows[i].emplace_back(col, Rational(-1));
  for (std::size_t i = 0; i < m; ++i) tab.rows[i].emplace_back(identity_col[i], Rational(1));
  for (auto& row : tab.rows) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  tab.barred.assign(num_cols, false);

  if (first_artificial < num_cols) {
    std::vector<Rational> phase1(num_cols, Rational(0));
    for (Column j = first_artificial; j < num_cols; ++j) phase1[j] = -1;
    tab.set_objective(phase1);
    tab.optimize();  // bounded by construction
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] >= first_artificial) infeasibility += tab.rhs[i];
    }
    if (infeasibility > 0) {
      result.status = LpStatus::kInfeasible;
      result.pivots = tab.pivots;
      return result;
    }
    // Pivot zero-level artificials out where the row allows it; rows that
    // cannot are redundant and stay inert.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < first_artificial) continue;
      for (const auto& [j, v] : tab.rows[i]) {
        if (j < first_artificial && v != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (Column j = first_artificial; j < num_cols; ++j) tab.barred[j] = true;
  }

  std::vector<Rational> cost(num_cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j];
  tab.set_objective(cost);
  const bool bounded = tab.optimize();
  result.pivots = tab.pivots;
  if (!bounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) result.primal[tab.basis[i]] = tab.rhs[i];
  }
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j) result.objective += problem.objective[j] * result.primal[j];
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = tab.reduced[identity_col[i]];
    if (std_rows[i].negated) y = -y;
    if (i < problem.constraints.size()) {
      result.duals[i] = y;
    } else {
      result.bound_duals[bound_row_var[i - problem.constraints.size()]] = y;
    }
  }
  return result;
}

std::string format_lp(const LpProblem& problem) {
  auto var = [&](std::size_t j) {
    const auto& name = problem.variable_names[j];
    return name.empty() ? "x" + std::to_string(j) : name;
  };
  auto terms = [&](const auto& list, auto coef_of, auto var_of) {
    std::string out;
    bool first = true;
    for (const auto& t : list) {
      const Rational& c = coef_of(t);
      if (c == 0) continue;
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      out += to_string(abs(c)) + " " + var(var_of(t));
      first = false;
    }
    return first ? std::string("0") : out;
  };
  std::ostringstream os;
  std::vector<std::size_t> all(problem.num_variables());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  os << "maximize: "
     << terms(all, [&](std::size_t j) -> const Rational& { return problem.objective[j]; },
              [](std::size_t j) { return j; })
     << '\n';
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& c = problem.constraints[i];
    const char* rel = c.relation == Relation::kLessEqual      ? "<="
                      : c.relation == Relation::kGreaterEqual ? ">="
                                                              : "=";
    os << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ": "
       << terms(c.terms, [](const LpTerm& t) -> const Rational& { return t.coefficient; },
                [](const LpTerm& t) { return t.variable; })
       << ' ' << rel << ' ' << to_string(c.rhs) << '\n';
  }
  for (std::size_t j = 0; j < problem.num_variables(); ++j) {
    os << "bound: 0 <= " << var(j);
    if (problem.upper[j]) os << " <= " << to_string(*problem.upper[j]);
    os << '\n';
  }
  return os.str();
}

}  // namespace rfot
