#include <doctest.h>

#include "rfot/analysis.hpp"
#include "rfot/evaluation.hpp"
#include "rfot/generators.hpp"
#include "rfot/paths.hpp"
#include "rfot/solvers.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

namespace rfot {
namespace {

TemporallyRepeatedFlow log_gap_optimum() {
  TemporallyRepeatedFlow flow;
  flow.rates[Path{{0, 3}}] = make_rational(2, 11);
  flow.rates[Path{{1, 3}}] = make_rational(3, 11);
  flow.rates[Path{{2, 3}}] = make_rational(6, 11);
  return flow;
}

TEST_CASE("value_under_scenario on the log-gap certificate") {
  const auto generated = gen_log_gap(3);
  const Instance& inst = generated.instance;
  const TripleSolution& cert = *generated.certificate;
  CHECK(value_under_scenario(cert, Scenario(), inst) == 3);
  CHECK(value_under_scenario(cert, Scenario({1, 2}), inst) == 1);
  CHECK(value_under_scenario(cert, Scenario({0, 1}), inst) == 1);

  const Instance embedded = gen_static_embedding(to_static(inst));
  CHECK(value_under_scenario(cert, Scenario({3}), embedded) == 0);
}

TEST_CASE("robust_value of the certificates") {
  const auto log_gap = gen_log_gap(3);
  const AdversaryReport report = robust_value(*log_gap.certificate, log_gap.instance);
  CHECK(report.robust_value == 1);
  CHECK(report.worst_scenario.size() == 2);

  const auto linear = gen_linear_gap(3);
  CHECK(robust_value(*linear.certificate, linear.instance).robust_value == 1);
  CHECK(robust_value(TripleSolution{}, linear.instance).robust_value == 0);
}

TEST_CASE("robust_value reports the lexicographically smallest minimizer") {
  const auto generated = gen_log_gap(3);
  EvaluationOptions options;
  options.record_all = true;
  const AdversaryReport report = robust_value(*generated.certificate, generated.instance, options);
  CHECK(report.worst_scenario == Scenario({0, 1}));
  CHECK(report.per_scenario.size() == 7);  // subsets of the three delayable edges
}

TEST_CASE("robust_value_tr on the optimal log-gap flow") {
  const Instance inst = gen_log_gap(3).instance;
  EvaluationOptions options;
  options.record_all = true;
  const AdversaryReport report = robust_value_tr(log_gap_optimum(), inst, options);
  CHECK(report.robust_value == make_rational(6, 11));
  int attaining = 0;
  for (const auto& [z, value] : report.per_scenario) {
    if (z.size() == 2 && !z.contains(3)) {
      CHECK(value == make_rational(6, 11));
      ++attaining;
    }
  }
  CHECK(attaining == 3);
}

TEST_CASE("robust_value_tr on the linear-gap diagonal flow") {
  const auto generated = gen_linear_gap(3);
  TemporallyRepeatedFlow flow;
  for (const auto& t : generated.certificate->triples) flow.rates[t.path] = make_rational(1, 3);
  CHECK(robust_value_tr(flow, generated.instance).robust_value == make_rational(1, 3));
}

TEST_CASE("robust_value_tr without budget is the nominal value") {
  const Instance inst = gen_log_gap(3).instance.with_budget(0);
  CHECK(robust_value_tr(log_gap_optimum(), inst).robust_value ==
        make_rational(2 * 3 + 3 * 2 + 6 * 1, 11));
}

TEST_CASE("greedy adversary") {
  const Instance inst = gen_log_gap(3).instance;
  const Scenario z = greedy_adversary_tr(log_gap_optimum(), inst);
  CHECK(z.size() == 2);
  CHECK_FALSE(z.contains(3));
  Rational value = 0;
  for (const auto& [path, rate] : log_gap_optimum().rates) {
    value += rate * Rational(inst.horizon - travel_time(path, inst) - capped_delay(path, z, inst));
  }
  CHECK(value == make_rational(6, 11));

  TemporallyRepeatedFlow single;
  single.rates[Path{{1, 3}}] = make_rational(1, 2);
  CHECK(greedy_adversary_tr(single, inst.with_budget(1)) == Scenario({1}));
  CHECK(greedy_adversary_tr(single, inst.with_budget(10)) == Scenario({1}));
  CHECK_THROWS_AS(greedy_adversary_tr(single, gen_linear_gap(3).instance), PreconditionError);
}

TEST_CASE("greedy adversary matches enumeration on T-bounded instances") {
  testing::Rng rng(31);
  testing::RandomShape shape;
  shape.max_vertices = 5;
  shape.max_edges = 8;
  for (int round = 0; round < 150; ++round) {
    const Instance inst = testing::random_t_bounded_instance(rng, shape);
    const TemporallyRepeatedFlow flow = testing::random_tr_flow(rng, inst);
    const Scenario z = greedy_adversary_tr(flow, inst);
    Rational greedy = 0;
    for (const auto& [path, rate] : flow.rates) {
      greedy += rate * Rational(inst.horizon - travel_time(path, inst) - capped_delay(path, z, inst));
    }
    CHECK(greedy == robust_value_tr(flow, inst).robust_value);
    CHECK(greedy == testing::robust_value_tr(flow, inst));
  }
}

TEST_CASE("capped and uncapped evaluation agree") {
  testing::Rng rng(32);
  testing::RandomShape shape;
  shape.infinite_delay = 0.2;
  for (int round = 0; round < 150; ++round) {
    const Instance inst = testing::random_instance(rng, shape);
    const TemporallyRepeatedFlow flow = testing::random_tr_flow(rng, inst);
    const TripleSolution triples = to_triples(flow, inst);
    for (const auto& z : enumerate_scenarios(inst)) {
      Rational capped = 0;
      for (const auto& [path, rate] : flow.rates) {
        capped += rate * Rational(inst.horizon - travel_time(path, inst) - capped_delay(path, z, inst));
      }
      CHECK(value_under_scenario(triples, z, inst) == capped);
    }
    CHECK(robust_value(triples, inst).robust_value == robust_value_tr(flow, inst).robust_value);
  }
}

TEST_CASE("robust values agree with the oracle and shrink with the budget") {
  testing::Rng rng(33);
  testing::RandomShape shape;
  shape.infinite_delay = 0.2;
  shape.max_budget = 3;
  for (int round = 0; round < 150; ++round) {
    const Instance inst = testing::random_instance(rng, shape);
    const TripleSolution sol = testing::random_triples(rng, inst);
    const Rational value = robust_value(sol, inst).robust_value;
    CHECK(value == testing::robust_value(sol, inst));
    CHECK(robust_value(sol, inst.with_budget(inst.budget + 1)).robust_value <= value);
  }
}

TEST_CASE("verifier on the clique reduction") {
  const auto k3 = gen_clique_reduction(UndirectedGraph{3, {{1, 2}, {1, 3}, {2, 3}}}, 3);
  const auto violation = verify_feasibility(*k3.certificate, k3.instance);
  REQUIRE(violation.has_value());
  CHECK(k3.instance.edges[violation->edge].id == "cap");
  CHECK(violation->time == 16);
  CHECK(violation->scenario.size() == 3);
  CHECK(violation->load == 3);
  CHECK(violation->capacity == 2);
  CHECK(format_violation(*violation, k3.instance) == "violation e=cap t=16 z=x1,x2,x3 load=3 u=2");

  const auto c4 =
      gen_clique_reduction(UndirectedGraph{4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}}, 3);
  CHECK_FALSE(verify_feasibility(*c4.certificate, c4.instance).has_value());

  const auto k4 = gen_clique_reduction(
      UndirectedGraph{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}, 4);
  CHECK(verify_feasibility(*k4.certificate, k4.instance).has_value());
}

TEST_CASE("log-gap certificate is feasible") {
  const auto generated = gen_log_gap(3);
  CHECK_FALSE(verify_feasibility(*generated.certificate, generated.instance).has_value());
}

TEST_CASE("verifier agrees with the integer-time oracle") {
  testing::Rng rng(34);
  testing::RandomShape shape;
  shape.infinite_delay = 0.2;
  shape.infinite_capacity = 0.2;
  shape.max_horizon = 6;
  int infeasible = 0;
  for (int round = 0; round < 300; ++round) {
    const Instance inst = testing::random_instance(rng, shape);
    const TripleSolution sol = testing::random_triples(rng, inst, 5);
    const auto violation = verify_feasibility(sol, inst);
    CHECK(violation.has_value() == !testing::is_feasible(sol, inst));
    if (violation) {
      ++infeasible;
      CHECK(violation->load > violation->capacity);
      CHECK(violation->time >= 0);
      CHECK(violation->time < inst.horizon);
    }
  }
  CHECK(infeasible > 20);
}

TEST_CASE("discretize examples") {
  const Instance inst = gen_log_gap(3).instance.with_budget(0);
  const Path p{{0, 3}};

  PiecewiseConstantFlow half;
  half.paths[p] = {{0, 2}, {make_rational(1, 2), 0}};
  TripleSolution out = discretize(half, inst);
  REQUIRE(out.triples.size() == 1);
  CHECK(out.triples[0].rate == 1);
  CHECK(out.triples[0].start == 0);
  CHECK(out.triples[0].end == 1);

  PiecewiseConstantFlow aligned;
  aligned.paths[p] = {{0, make_rational(1, 2)}, {2, 0}};
  out = discretize(aligned, inst);
  REQUIRE(out.triples.size() == 1);
  CHECK(out.triples[0].rate == make_rational(1, 2));
  CHECK(out.triples[0].end == 2);

  PiecewiseConstantFlow shifted;
  shifted.paths[p] = {{make_rational(1, 3), 1}, {make_rational(5, 3), 0}};
  out = discretize(shifted, inst);
  // 2/3 on [0,1) and on [1,2), merged.
  REQUIRE(out.triples.size() == 1);
  CHECK(out.triples[0].rate == make_rational(2, 3));
  CHECK(out.triples[0].start == 0);
  CHECK(out.triples[0].end == 2);
}

TEST_CASE("piecewise flows are validated") {
  const Instance inst = gen_log_gap(3).instance;
  PiecewiseConstantFlow flow;
  flow.paths[Path{{0, 3}}] = {{1, 1}, {1, 0}};
  CHECK_FALSE(validate_piecewise(flow, inst).empty());
  flow.paths[Path{{0, 3}}] = {{0, 1}, {5, 0}};
  CHECK_FALSE(validate_piecewise(flow, inst).empty());
  flow.paths[Path{{0, 3}}] = {{0, -1}, {1, 0}};
  CHECK_FALSE(validate_piecewise(flow, inst).empty());
  flow.paths[Path{{0, 3}}] = {{0, 1}, {1, 0}};
  CHECK(validate_piecewise(flow, inst).empty());
}

TEST_CASE("discretize preserves value and feasibility") {
  testing::Rng rng(35);
  testing::RandomShape shape;
  shape.max_vertices = 4;
  shape.max_edges = 6;
  shape.infinite_delay = 0.2;
  for (int round = 0; round < 40; ++round) {
    const Instance inst = testing::random_instance(rng, shape);
    const PiecewiseConstantFlow flow = testing::random_piecewise_flow(rng, inst);
    CHECK(validate_piecewise(flow, inst).empty());
    CHECK_FALSE(verify_piecewise_feasibility(flow, inst).has_value());
    const TripleSolution triples = discretize(flow, inst);
    CHECK(validate_solution(triples, inst).empty());
    const Rational direct = robust_value_piecewise(flow, inst).robust_value;
    CHECK(direct == testing::robust_value_piecewise(flow, inst));
    CHECK(robust_value(triples, inst).robust_value == direct);
    CHECK_FALSE(verify_feasibility(triples, inst).has_value());
    CHECK(testing::is_feasible(triples, inst));
  }
}

TEST_CASE("piecewise verifier finds overloads at fractional times") {
  Instance inst;
  inst.vertices = {"s", "d"};
  inst.source = 0;
  inst.sink = 1;
  inst.horizon = 3;
  inst.edges.push_back(Edge{"a", 0, 1, Rational(1), 0, Delay(0)});
  PiecewiseConstantFlow flow;
  flow.paths[Path{{0}}] = {{0, 1}, {make_rational(3, 2), 3}, {make_rational(7, 4), 0}};
  const auto violation = verify_piecewise_feasibility(flow, inst);
  REQUIRE(violation.has_value());
  CHECK(violation->time == make_rational(3, 2));
  CHECK(violation->load == 3);
  CHECK_FALSE(testing::is_feasible_piecewise(flow, inst, 4));
}

}  // namespace
}  // namespace rfot
