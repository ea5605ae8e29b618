#include "rfot/model.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace rfot {

std::optional<VertexIndex> Instance::find_vertex(std::string_view id) const {
  for (VertexIndex v = 0; v < vertices.size(); ++v) {
    if (vertices[v] == id) return v;
  }
  return std::nullopt;
}

std::optional<EdgeIndex> Instance::find_edge(std::string_view id) const {
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (edges[e].id == id) return e;
  }
  return std::nullopt;
}

Instance Instance::with_budget(std::int64_t gamma) const {
  Instance copy = *this;
  copy.budget = gamma;
  return copy;
}

Instance Instance::with_horizon(Time t) const {
  Instance copy = *this;
  copy.horizon = t;
  return copy;
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  const auto n = inst.vertices.size();
  std::set<std::string> seen;
  for (const auto& v : inst.vertices) {
    if (!seen.insert(v).second) out.push_back("duplicate vertex id " + v);
  }
  if (inst.source >= n) out.push_back("source is not a declared vertex");
  if (inst.sink >= n) out.push_back("sink is not a declared vertex");
  if (inst.source == inst.sink) out.push_back("source and sink coincide");
  if (inst.horizon < 1) out.push_back("horizon must be >= 1");
  if (inst.budget < 0) out.push_back("budget gamma must be >= 0");

  seen.clear();
  for (const auto& e : inst.edges) {
    if (!seen.insert(e.id).second) out.push_back("duplicate edge id " + e.id);
    if (e.tail >= n || e.head >= n) {
      out.push_back("edge " + e.id + " has an undeclared endpoint");
      continue;
    }
    if (e.tail == inst.sink) out.push_back("sink has outgoing edge " + e.id);
    if (e.tail == e.head) out.push_back("edge " + e.id + " is a loop");
    if (e.capacity.is_finite() && e.capacity.value() <= 0) {
      out.push_back("edge " + e.id + " needs positive capacity");
    }
    if (e.travel_time < 0) out.push_back("edge " + e.id + " has negative travel time");
    if (e.delay.is_finite() && e.delay.value() < 0) {
      out.push_back("edge " + e.id + " has negative delay");
    }
  }
  return out;
}

void require_valid(const Instance& inst) {
  const auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw PreconditionError(msg);
}

bool Path::contains(EdgeIndex e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::optional<std::string> path_error(const Path& path, const Instance& inst) {
  if (path.edges.empty()) return "empty path";
  std::vector<bool> visited(inst.vertices.size(), false);
  VertexIndex at = inst.source;
  visited[at] = true;
  for (EdgeIndex e : path.edges) {
    if (e >= inst.edges.size()) return "unknown edge index " + std::to_string(e);
    const Edge& edge = inst.edges[e];
    if (edge.tail != at) return "edge " + edge.id + " does not continue the path";
    at = edge.head;
    if (visited[at]) return "path revisits vertex " + inst.vertices[at];
    visited[at] = true;
  }
  if (at != inst.sink) return "path does not end at the sink";
  return std::nullopt;
}

Scenario::Scenario(std::vector<EdgeIndex> edges) : delayed(std::move(edges)) {
  std::sort(delayed.begin(), delayed.end());
  delayed.erase(std::unique(delayed.begin(), delayed.end()), delayed.end());
}

bool Scenario::contains(EdgeIndex e) const {
  return std::binary_search(delayed.begin(), delayed.end(), e);
}

std::uint64_t count_scenarios(std::uint64_t n, std::int64_t gamma) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (gamma < 0) return 0;
  const auto k_max = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(gamma));
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, k)
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    if (k > 0) {
      // C(n,k) = C(n,k-1) * (n-k+1) / k; the division is exact.
      unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - k + 1) / k;
      if (next > kMax) return kMax;
      binom = static_cast<std::uint64_t>(next);
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

ScenarioSet::ScenarioSet(std::vector<EdgeIndex> candidates, std::int64_t gamma)
    : candidates_(std::move(candidates)),
      max_size_(gamma < 0 ? 0 : std::min<std::size_t>(candidates_.size(),
                                                      static_cast<std::size_t>(gamma))),
      gamma_(gamma) {
  std::sort(candidates_.begin(), candidates_.end());
}

ScenarioSet::iterator::iterator(const ScenarioSet* owner, bool done)
    : owner_(owner), done_(done || owner->gamma_ < 0) {
  if (!done_) materialize();
}

void ScenarioSet::iterator::materialize() {
  std::vector<EdgeIndex> edges;
  edges.reserve(positions_.size());
  for (auto p : positions_) edges.push_back(owner_->candidates_[p]);
  current_.delayed = std::move(edges);
}

ScenarioSet::iterator& ScenarioSet::iterator::operator++() {
  const std::size_t n = owner_->candidates_.size();
  const std::size_t k = positions_.size();
  // Advance to the next k-combination in lexicographic order.
  std::size_t i = k;
  while (i > 0 && positions_[i - 1] == n - k + i - 1) --i;
  if (i > 0) {
    ++positions_[i - 1];
    for (std::size_t j = i; j < k; ++j) positions_[j] = positions_[j - 1] + 1;
  } else if (k < owner_->max_size_) {
    positions_.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) positions_[j] = j;
  } else {
    done_ = true;
    positions_.clear();
    current_.delayed.clear();
    return *this;
  }
  materialize();
  return *this;
}

namespace {

ScenarioSet checked(std::vector<EdgeIndex> candidates, const Instance& inst,
                    const Limits& limits) {
  ScenarioSet set(std::move(candidates), inst.budget);
  if (set.size() > limits.max_scenarios) {
    throw CapExceeded("scenario count " + std::to_string(set.size()) +
                      " exceeds the cap of " + std::to_string(limits.max_scenarios) +
                      "; instance is beyond desk scale");
  }
  return set;
}

}  // namespace

ScenarioSet enumerate_scenarios(const Instance& inst, const Limits& limits) {
  std::vector<EdgeIndex> all(inst.edges.size());
  for (EdgeIndex e = 0; e < all.size(); ++e) all[e] = e;
  return checked(std::move(all), inst, limits);
}

ScenarioSet effective_scenarios(const Instance& inst, const Limits& limits) {
  std::vector<EdgeIndex> delayable;
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
    const Delay& d = inst.edges[e].delay;
    if (d.is_infinite() || d.value() > 0) delayable.push_back(e);
  }
  return checked(std::move(delayable), inst, limits);
}

std::vector<std::string> validate_solution(const TripleSolution& sol, const Instance& inst) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < sol.triples.size(); ++i) {
    const Triple& t = sol.triples[i];
    const std::string tag = "triple " + std::to_string(i) + ": ";
    if (auto err = path_error(t.path, inst)) out.push_back(tag + *err);
    if (t.rate <= 0) out.push_back(tag + "rate must be positive");
    if (t.start < 0 || t.start >= t.end || t.end > inst.horizon) {
      out.push_back(tag + "dispatch interval must satisfy 0 <= a < b <= T");
    }
  }
  return out;
}

Rational edge_load(const TemporallyRepeatedFlow& flow, EdgeIndex e) {
  Rational load = 0;
  for (const auto& [path, rate] : flow.rates) {
    if (path.contains(e)) load += rate;
  }
  return load;
}

std::vector<std::string> validate_tr_flow(const TemporallyRepeatedFlow& flow,
                                          const Instance& inst) {
  std::vector<std::string> out;
  for (const auto& [path, rate] : flow.rates) {
    if (auto err = path_error(path, inst)) {
      out.push_back(*err);
      continue;
    }
    Time tau = 0;
    for (EdgeIndex e : path.edges) tau += inst.edges[e].travel_time;
    if (rate <= 0) out.push_back("path " + format_path(path, inst) + " has nonpositive rate");
    if (tau >= inst.horizon) {
      out.push_back("path " + format_path(path, inst) + " has an empty dispatch window");
    }
  }
  if (!out.empty()) return out;
  for (EdgeIndex e = 0; e < inst.edges.size(); ++e) {
    const Capacity& u = inst.edges[e].capacity;
    if (u.is_infinite()) continue;
    const Rational load = edge_load(flow, e);
    if (load > u.value()) {
      out.push_back("edge " + inst.edges[e].id + " carries " + to_string(load) +
                    " above capacity " + to_string(u.value()));
    }
  }
  return out;
}

TripleSolution to_triples(const TemporallyRepeatedFlow& flow, const Instance& inst) {
  TripleSolution sol;
  for (const auto& [path, rate] : flow.rates) {
    Time tau = 0;
    for (EdgeIndex e : path.edges) tau += inst.edges[e].travel_time;
    if (tau >= inst.horizon) continue;
    sol.triples.push_back(Triple{path, rate, 0, inst.horizon - tau});
  }
  return sol;
}

std::string format_path(const Path& path, const Instance& inst) {
  std::string out;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (i > 0) out += ',';
    out += inst.edges.at(path.edges[i]).id;
  }
  return out;
}

std::string format_scenario(const Scenario& z, const Instance& inst) {
  std::string out;
  for (std::size_t i = 0; i < z.delayed.size(); ++i) {
    if (i > 0) out += ',';
    out += inst.edges.at(z.delayed[i]).id;
  }
  return out;
}

}  // namespace rfot
