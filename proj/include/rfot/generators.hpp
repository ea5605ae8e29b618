#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rfot/model.hpp"

namespace rfot {

struct GeneratedInstance {
  Instance instance;
  std::optional<TripleSolution> certificate;
};

// Vertices s, v, d; parallel edges e<i> = (s, v) with tau = i and
// delta = r - i for i < r; edge estar = (v, d) with tau = delta = 0; unit
// capacities; T = r, Gamma = r - 1. Certificate: one unit on every path
// during [0, 1).
GeneratedInstance gen_log_gap(int r);

// Vertices s, v1, v2, d; parallel edges e1_<i> = (s, v1) and e2_<i> =
// (v2, d) with tau = i and infinite delay; estar = (v1, v2); unit
// capacities; T = r, Gamma = r - 1. Certificate: one unit on
// {e1_i, estar, e2_(r-i-1)} during [0, 1).
GeneratedInstance gen_linear_gap(int r);

// Undirected simple graph on vertices 1..n.
struct UndirectedGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Feasibility-checking hardness gadget: the candidate solution is
// infeasible iff `graph` has a clique of size r. Requires |E| >= |V|,
// r >= 3 and |E| <= 60.
GeneratedInstance gen_clique_reduction(const UndirectedGraph& graph, int r);

struct DirectedGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Integral-flow hardness gadget around a two-disjoint-paths instance. Adds
// a super source "s" and super sink "d"; the graph may not already use
// those names.
Instance gen_disjoint_paths_reduction(const DirectedGraph& graph, const std::string& s1,
                                      const std::string& s2, const std::string& d1,
                                      const std::string& d2);

struct StaticEdge {
  std::string id;
  std::string tail;
  std::string head;
  Capacity capacity = Capacity::infinite();
};

struct StaticInstance {
  std::vector<std::string> vertices;
  std::vector<StaticEdge> edges;
  std::string source;
  std::string sink;
  std::int64_t budget = 0;
};

// T = 1, tau = 0 and infinite delay on every edge.
Instance gen_static_embedding(const StaticInstance& input);

// Drops the time data of an instance.
StaticInstance to_static(const Instance& inst);

}  // namespace rfot
