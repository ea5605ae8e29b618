#include "rfot/generators.hpp"

#include <set>

namespace rfot {
namespace {

VertexIndex add_vertex(Instance& inst, std::string id) {
  inst.vertices.push_back(std::move(id));
  return inst.vertices.size() - 1;
}

EdgeIndex add_edge(Instance& inst, std::string id, VertexIndex tail, VertexIndex head,
                   Capacity u, Time tau, Delay delta) {
  inst.edges.push_back(Edge{std::move(id), tail, head, std::move(u), tau, delta});
  return inst.edges.size() - 1;
}

void require_r(int r, int min) {
  if (r < min) throw PreconditionError("family parameter r must be >= " + std::to_string(min));
}

}  // namespace

GeneratedInstance gen_log_gap(int r) {
  require_r(r, 2);
  GeneratedInstance out;
  Instance& inst = out.instance;
  const auto s = add_vertex(inst, "s");
  const auto v = add_vertex(inst, "v");
  const auto d = add_vertex(inst, "d");
  inst.source = s;
  inst.sink = d;
  inst.horizon = r;
  inst.budget = r - 1;
  for (int i = 0; i < r; ++i) {
    add_edge(inst, "e" + std::to_string(i), s, v, Rational(1), i, Delay(r - i));
  }
  const auto star = add_edge(inst, "estar", v, d, Rational(1), 0, Delay(0));
  TripleSolution cert;
  for (int i = 0; i < r; ++i) {
    cert.triples.push_back(Triple{Path{{static_cast<EdgeIndex>(i), star}}, Rational(1), 0, 1});
  }
  out.certificate = std::move(cert);
  return out;
}

GeneratedInstance gen_linear_gap(int r) {
  require_r(r, 2);
  GeneratedInstance out;
  Instance& inst = out.instance;
  const auto s = add_vertex(inst, "s");
  const auto v1 = add_vertex(inst, "v1");
  const auto v2 = add_vertex(inst, "v2");
  const auto d = add_vertex(inst, "d");
  inst.source = s;
  inst.sink = d;
  inst.horizon = r;
  inst.budget = r - 1;
  std::vector<EdgeIndex> first;
  std::vector<EdgeIndex> second;
  for (int i = 0; i < r; ++i) {
    first.push_back(add_edge(inst, "e1_" + std::to_string(i), s, v1, Rational(1), i, Delay::infinite()));
  }
  const auto star = add_edge(inst, "estar", v1, v2, Rational(1), 0, Delay(0));
  for (int i = 0; i < r; ++i) {
    second.push_back(add_edge(inst, "e2_" + std::to_string(i), v2, d, Rational(1), i, Delay::infinite()));
  }
  TripleSolution cert;
  for (int i = 0; i < r; ++i) {
    cert.triples.push_back(
        Triple{Path{{first[i], star, second[r - i - 1]}}, Rational(1), 0, 1});
  }
  out.certificate = std::move(cert);
  return out;
}

GeneratedInstance gen_clique_reduction(const UndirectedGraph& graph, int r) {
  const int n = graph.num_vertices;
  const int m = static_cast<int>(graph.edges.size());
  if (r < 3) throw PreconditionError("clique reduction needs r >= 3");
  if (m < n) throw PreconditionError("clique reduction needs at least as many edges as vertices");
  if (m > 60) throw PreconditionError("clique reduction supports at most 60 edges (times are 2^(m+1))");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : graph.edges) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw PreconditionError("graph edges must join two distinct vertices in 1..n");
    }
    if (!seen.insert(std::minmax(i, j)).second) throw PreconditionError("graph must be simple");
  }

  GeneratedInstance out;
  Instance& inst = out.instance;
  const Time top = Time{1} << (m + 1);
  const auto s = add_vertex(inst, "s");
  const auto d0 = add_vertex(inst, "d0");
  const auto d1 = add_vertex(inst, "d1");
  std::vector<VertexIndex> left(n + 1);
  std::vector<VertexIndex> right(n + 1);
  for (int i = 1; i <= n; ++i) {
    left[i] = add_vertex(inst, "vl" + std::to_string(i));
    right[i] = add_vertex(inst, "vr" + std::to_string(i));
  }
  inst.source = s;
  inst.sink = d1;
  inst.horizon = top + 1;
  inst.budget = r;

  const auto inf = Capacity::infinite();
  std::vector<EdgeIndex> vertex_edge(n + 1);
  for (int i = 1; i <= n; ++i) {
    vertex_edge[i] = add_edge(inst, "x" + std::to_string(i), left[i], right[i], inf, 0, Delay(Time{1} << i));
  }
  std::vector<EdgeIndex> to_d0(n + 1);
  for (int i = 1; i <= n; ++i) {
    to_d0[i] = add_edge(inst, "o" + std::to_string(i), right[i], d0, inf, 0, Delay(0));
  }
  std::vector<std::vector<EdgeIndex>> backward(n + 1, std::vector<EdgeIndex>(n + 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      backward[i][j] = add_edge(inst, "b" + std::to_string(i) + "_" + std::to_string(j),
                                right[i], left[j], inf, 0, Delay(0));
    }
  }
  const auto bottleneck = add_edge(inst, "cap", d0, d1, Rational(r * (r - 1) / 2 - 1), 0, Delay(0));

  TripleSolution cert;
  for (int k = 0; k < m; ++k) {
    const auto [i, j] = std::minmax(graph.edges[k].first, graph.edges[k].second);
    const Time tau = top - (Time{1} << i) - (Time{1} << j);
    const auto into_i = add_edge(inst, "in" + std::to_string(k) + "_" + std::to_string(i), s,
                                 left[i], inf, tau, Delay(0));
    add_edge(inst, "in" + std::to_string(k) + "_" + std::to_string(j), s, left[j], inf, tau,
             Delay(0));
    cert.triples.push_back(Triple{
        Path{{into_i, vertex_edge[i], backward[i][j], vertex_edge[j], to_d0[j], bottleneck}},
        Rational(1), 0, 1});
  }
  out.certificate = std::move(cert);
  return out;
}

Instance gen_disjoint_paths_reduction(const DirectedGraph& graph, const std::string& s1,
                                      const std::string& s2, const std::string& d1,
                                      const std::string& d2) {
  Instance inst;
  for (const auto& v : graph.vertices) {
    if (v == "s" || v == "d") throw PreconditionError("graph may not use the vertex names s and d");
    add_vertex(inst, v);
  }
  const std::set<std::string> terminals{s1, s2, d1, d2};
  if (terminals.size() != 4) throw PreconditionError("terminals must be pairwise distinct");
  for (const auto& t : terminals) {
    if (!inst.find_vertex(t)) throw PreconditionError("terminal " + t + " is not a vertex");
  }
  const auto s = add_vertex(inst, "s");
  const auto d = add_vertex(inst, "d");
  inst.source = s;
  inst.sink = d;
  inst.horizon = 2;
  inst.budget = 1;
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    const auto tail = inst.find_vertex(graph.edges[k].first);
    const auto head = inst.find_vertex(graph.edges[k].second);
    if (!tail || !head) throw PreconditionError("graph edge references an unknown vertex");
    add_edge(inst, "g" + std::to_string(k), *tail, *head, Rational(1), 0, Delay(2));
  }
  add_edge(inst, "ss1", s, *inst.find_vertex(s1), Rational(1), 0, Delay(2));
  add_edge(inst, "ss2", s, *inst.find_vertex(s2), Rational(1), 1, Delay(2));
  add_edge(inst, "d1d", *inst.find_vertex(d1), d, Rational(1), 1, Delay(2));
  add_edge(inst, "d2d", *inst.find_vertex(d2), d, Rational(1), 0, Delay(2));
  return inst;
}

Instance gen_static_embedding(const StaticInstance& input) {
  Instance inst;
  for (const auto& v : input.vertices) add_vertex(inst, v);
  const auto s = inst.find_vertex(input.source);
  const auto d = inst.find_vertex(input.sink);
  if (!s || !d) throw PreconditionError("source or sink is not a vertex");
  inst.source = *s;
  inst.sink = *d;
  inst.horizon = 1;
  inst.budget = input.budget;
  for (const auto& e : input.edges) {
    const auto tail = inst.find_vertex(e.tail);
    const auto head = inst.find_vertex(e.head);
    if (!tail || !head) throw PreconditionError("edge " + e.id + " references an unknown vertex");
    add_edge(inst, e.id, *tail, *head, e.capacity, 0, Delay::infinite());
  }
  return inst;
}

StaticInstance to_static(const Instance& inst) {
  StaticInstance out;
  out.vertices = inst.vertices;
  out.source = inst.vertices.at(inst.source);
  out.sink = inst.vertices.at(inst.sink);
  out.budget = inst.budget;
  for (const auto& e : inst.edges) {
    out.edges.push_back(StaticEdge{e.id, inst.vertices.at(e.tail), inst.vertices.at(e.head), e.capacity});
  }
  return out;
}

}  // namespace rfot
