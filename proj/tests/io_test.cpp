#include <doctest.h>

#include <sstream>

#include "rfot/generators.hpp"
#include "rfot/io.hpp"
#include "support/random_instances.hpp"

namespace rfot {
namespace {

bool same_instance(const Instance& a, const Instance& b) {
  if (a.vertices != b.vertices || a.source != b.source || a.sink != b.sink ||
      a.horizon != b.horizon || a.budget != b.budget || a.edges.size() != b.edges.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.edges.size(); ++k) {
    const Edge& x = a.edges[k];
    const Edge& y = b.edges[k];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head || !(x.capacity == y.capacity) ||
        x.travel_time != y.travel_time || !(x.delay == y.delay)) {
      return false;
    }
  }
  return true;
}

TEST_CASE("instances round-trip through the text format") {
  testing::Rng rng(5);
  testing::RandomShape shape;
  shape.infinite_capacity = 0.3;
  shape.infinite_delay = 0.3;
  for (int round = 0; round < 100; ++round) {
    const Instance inst = testing::random_instance(rng, shape);
    std::stringstream text;
    write_instance(text, inst);
    CHECK(same_instance(read_instance(text), inst));
  }
  const Instance linear = gen_linear_gap(3).instance;
  std::stringstream text;
  write_instance(text, linear);
  CHECK(same_instance(read_instance(text), linear));
}

TEST_CASE("solutions round-trip through the text format") {
  testing::Rng rng(6);
  testing::RandomShape shape;
  for (int round = 0; round < 100; ++round) {
    const Instance inst = testing::random_instance(rng, shape);
    const TripleSolution sol = testing::random_triples(rng, inst);
    std::stringstream text;
    write_solution(text, sol, inst);
    const SolutionFile back = read_solution(text, inst);
    REQUIRE(back.triples.triples.size() == sol.triples.size());
    for (std::size_t k = 0; k < sol.triples.size(); ++k) {
      CHECK(back.triples.triples[k].path == sol.triples[k].path);
      CHECK(back.triples.triples[k].rate == sol.triples[k].rate);
      CHECK(back.triples.triples[k].start == sol.triples[k].start);
      CHECK(back.triples.triples[k].end == sol.triples[k].end);
    }

    const TemporallyRepeatedFlow flow = testing::random_tr_flow(rng, inst);
    std::stringstream tr_text;
    write_solution(tr_text, flow, inst);
    CHECK(read_solution(tr_text, inst).repeated.rates == flow.rates);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  std::stringstream text(
      "# a comment\n"
      "\n"
      "instance T=3 gamma=1 s=s d=d   # trailing\n"
      "vertex s\n"
      "vertex d\n"
      "edge a s d u=3/2 tau=1 delta=inf\n");
  const Instance inst = read_instance(text);
  REQUIRE(inst.edges.size() == 1);
  CHECK(inst.edges[0].capacity.value() == make_rational(3, 2));
  CHECK(inst.edges[0].delay.is_infinite());
  CHECK(inst.horizon == 3);
}

TEST_CASE("malformed input reports the line number") {
  const char* bad_inputs[] = {
      "instance T=3 gamma=1 s=s d=d\nvertex s\nvertex d\nedge a s x u=1 tau=0 delta=0\n",
      "instance T=3 gamma=1 s=s d=d\nvertex s\nvertex d\nedge a s d u=1 tau=zero delta=0\n",
      "instance T=3 gamma=1 s=s d=d\nvertex s\nvertex d\nedge a s d u=1/0 tau=0 delta=0\n",
      "instance T=3 gamma=1 s=s d=d\nvertex s\nvertex d\nbogus\n",
  };
  for (const char* input : bad_inputs) {
    std::stringstream text(input);
    try {
      read_instance(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
  std::stringstream headless("vertex s\n");
  CHECK_THROWS_AS(read_instance(headless), ParseError);
}

TEST_CASE("solution lines must reference known edges") {
  const Instance inst = gen_log_gap(2).instance;
  std::stringstream text("triple path=e0,nope rate=1 a=0 b=1\n");
  CHECK_THROWS_AS(read_solution(text, inst), ParseError);
  std::stringstream rate("trpath path=e0,estar rate=abc\n");
  CHECK_THROWS_AS(read_solution(rate, inst), ParseError);
}

}  // namespace
}  // namespace rfot
