#include "rfot/paths.hpp"

#include <algorithm>

namespace rfot {
namespace {

struct PathSearch {
  const Instance& inst;
  std::optional<Time> max_tau;
  const Limits& limits;
  std::vector<std::vector<EdgeIndex>> out_edges;
  std::vector<bool> on_path;
  std::vector<EdgeIndex> stack;
  std::vector<Path> found;

  void visit(VertexIndex v, Time tau) {
    if (v == inst.sink) {
      if (found.size() >= limits.max_paths) {
        throw CapExceeded("more than " + std::to_string(limits.max_paths) +
                          " simple s-d paths; instance is beyond desk scale");
      }
      found.push_back(Path{stack});
      return;
    }
    for (EdgeIndex e : out_edges[v]) {
      const Edge& edge = inst.edges[e];
      if (on_path[edge.head]) continue;
      const Time next = tau + edge.travel_time;
      // Travel times are nonnegative, so a prefix over the bound stays over it.
      if (max_tau && next > *max_tau) continue;
      on_path[edge.head] = true;
      stack.push_back(e);
      visit(edge.head, next);
      stack.pop_back();
      on_path[edge.head] = false;
    }
  }
};

std::size_t position_of(const Path& path, EdgeIndex e) {
  const auto it = std::find(path.edges.begin(), path.edges.end(), e);
  if (it == path.edges.end()) throw PreconditionError("edge is not on the path");
  return static_cast<std::size_t>(it - path.edges.begin());
}

}  // namespace

std::vector<Path> enumerate_paths(const Instance& inst, std::optional<Time> max_tau,
                                  const Limits& limits) {
  PathSearch search{inst, max_tau, limits, {}, {}, {}, {}};
  search.out_edges.resize(inst.vertices.size());
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
    search.out_edges[inst.edges[e].tail].push_back(e);
  }
  search.on_path.assign(inst.vertices.size(), false);
  if (inst.source >= inst.vertices.size() || inst.source == inst.sink) return {};
  if (max_tau && *max_tau < 0) return {};
  search.on_path[inst.source] = true;
  search.visit(inst.source, 0);
  return std::move(search.found);
}

Time travel_time(const Path& path, const Instance& inst) {
  Time tau = 0;
  for (EdgeIndex e : path.edges) tau += inst.edges[e].travel_time;
  return tau;
}

Time PathMetrics::prefix_at(const Path& path, EdgeIndex e) const {
  return prefix_tau[position_of(path, e)];
}

Time PathMetrics::suffix_at(const Path& path, EdgeIndex e) const {
  return suffix_tau[position_of(path, e)];
}

PathMetrics path_metrics(const Path& path, const Instance& inst) {
  PathMetrics m;
  const std::size_t n = path.edges.size();
  m.prefix_tau.resize(n);
  m.suffix_tau.resize(n);
  Time acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    m.prefix_tau[i] = acc;
    acc += inst.edges[path.edges[i]].travel_time;
  }
  m.tau = acc;
  for (std::size_t i = 0; i < n; ++i) m.suffix_tau[i] = acc - m.prefix_tau[i];
  return m;
}

Delay scenario_delay(const Path& path, const Scenario& z, const Instance& inst) {
  Time total = 0;
  for (EdgeIndex e : path.edges) {
    if (!z.contains(e)) continue;
    const Delay& d = inst.edges[e].delay;
    if (d.is_infinite()) return Delay::infinite();
    total += d.value();
  }
  return total;
}

Time capped_delay(const Path& path, const Scenario& z, const Instance& inst) {
  const Time window = inst.horizon - travel_time(path, inst);
  if (window < 0) throw PreconditionError("capped_delay requires tau(P) <= T");
  const Delay d = scenario_delay(path, z, inst);
  return d.is_infinite() ? window : std::min(d.value(), window);
}

Delay prefix_delay(const Path& path, EdgeIndex e, const Scenario& z, const Instance& inst) {
  const std::size_t pos = position_of(path, e);
  Time total = 0;
  for (std::size_t i = 0; i < pos; ++i) {
    const EdgeIndex f = path.edges[i];
    if (!z.contains(f)) continue;
    const Delay& d = inst.edges[f].delay;
    if (d.is_infinite()) return Delay::infinite();
    total += d.value();
  }
  return total;
}

std::optional<Time> entry_offset(const Path& path, std::size_t position, const Scenario& z,
                                 const Instance& inst) {
  Time offset = 0;
  for (std::size_t i = 0; i < position; ++i) {
    const Edge& edge = inst.edges[path.edges[i]];
    offset += edge.travel_time;
    if (z.contains(path.edges[i])) {
      if (edge.delay.is_infinite()) return std::nullopt;
      offset += edge.delay.value();
    }
  }
  return offset;
}

}  // namespace rfot
