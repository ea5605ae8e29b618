#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rfot/errors.hpp"
#include "rfot/rational.hpp"

namespace rfot {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;
using Time = std::int64_t;

using Capacity = MaybeInfinite<Rational>;
using Delay = MaybeInfinite<Time>;

struct Edge {
  std::string id;
  VertexIndex tail = 0;
  VertexIndex head = 0;
  Capacity capacity = Capacity::infinite();
  Time travel_time = 0;
  Delay delay = 0;
};

// A robust max-flow-over-time instance. Edges are identified by their
// position in `edges`; parallel edges are allowed.
struct Instance {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  VertexIndex source = 0;
  VertexIndex sink = 0;
  Time horizon = 1;
  std::int64_t budget = 0;

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  Instance with_budget(std::int64_t gamma) const;
  Instance with_horizon(Time horizon) const;
};

// Every violated invariant, as human-readable messages. Empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

// Throws PreconditionError listing the violations when the instance is invalid.
void require_valid(const Instance& inst);

struct Path {
  std::vector<EdgeIndex> edges;

  bool contains(EdgeIndex e) const;
  auto operator<=>(const Path&) const = default;
};

// Empty optional if `path` is a simple s-d path of `inst`.
std::optional<std::string> path_error(const Path& path, const Instance& inst);

// A set of delayed edges, kept sorted. Ordering is lexicographic on the
// sorted id sequence, so the empty scenario is the smallest.
struct Scenario {
  std::vector<EdgeIndex> delayed;

  Scenario() = default;
  explicit Scenario(std::vector<EdgeIndex> edges);

  bool contains(EdgeIndex e) const;
  std::size_t size() const { return delayed.size(); }
  auto operator<=>(const Scenario&) const = default;
};

// Number of subsets of size 0..gamma of an n-set, saturating at UINT64_MAX.
std::uint64_t count_scenarios(std::uint64_t n, std::int64_t gamma);

// All subsets of `candidates` with at most `gamma` elements, by increasing
// size and lexicographically within a size. Iteration is lazy.
class ScenarioSet {
 public:
  ScenarioSet(std::vector<EdgeIndex> candidates, std::int64_t gamma);

  std::uint64_t size() const { return count_scenarios(candidates_.size(), gamma_); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Scenario;
    using difference_type = std::ptrdiff_t;
    using pointer = const Scenario*;
    using reference = const Scenario&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.positions_ == b.positions_);
    }

   private:
    friend class ScenarioSet;
    iterator(const ScenarioSet* owner, bool done);
    void materialize();

    const ScenarioSet* owner_ = nullptr;
    std::vector<std::size_t> positions_;
    Scenario current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

 private:
  std::vector<EdgeIndex> candidates_;
  std::size_t max_size_;
  std::int64_t gamma_;
};

// Every scenario of the instance (subsets of E of size <= Gamma), including
// the empty one. Throws CapExceeded above limits.max_scenarios.
ScenarioSet enumerate_scenarios(const Instance& inst, const Limits& limits = {});

// Subsets of the edges with positive delay only. Every scenario behaves
// exactly like its intersection with these edges, so adversaries and the
// verifier range over this smaller family.
ScenarioSet effective_scenarios(const Instance& inst, const Limits& limits = {});

struct Triple {
  Path path;
  Rational rate;
  Time start = 0;  // dispatch interval [start, end)
  Time end = 0;
};

struct TripleSolution {
  std::vector<Triple> triples;
};

std::vector<std::string> validate_solution(const TripleSolution& sol, const Instance& inst);

// Constant rate per path over [0, T - tau(P)).
struct TemporallyRepeatedFlow {
  std::map<Path, Rational> rates;
};

// Checks simple paths, positive rates, tau(P) < T and edge capacities.
std::vector<std::string> validate_tr_flow(const TemporallyRepeatedFlow& flow,
                                          const Instance& inst);

Rational edge_load(const TemporallyRepeatedFlow& flow, EdgeIndex e);

TripleSolution to_triples(const TemporallyRepeatedFlow& flow, const Instance& inst);

std::string format_path(const Path& path, const Instance& inst);
std::string format_scenario(const Scenario& z, const Instance& inst);

}  // namespace rfot
