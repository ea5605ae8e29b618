#pragma once

#include <optional>
#include <vector>

#include "rfot/model.hpp"

namespace rfot {

// All simple s-d paths, in lexicographic order of their edge-index
// sequences. With `max_tau`, only paths with tau(P) <= max_tau are kept.
// Throws CapExceeded once more than limits.max_paths paths are found.
std::vector<Path> enumerate_paths(const Instance& inst, std::optional<Time> max_tau = {},
                                  const Limits& limits = {});

Time travel_time(const Path& path, const Instance& inst);

// Per-position travel-time prefix and suffix sums of a path:
// prefix_tau[i] = tau of the edges before position i,
// suffix_tau[i] = tau of the edges from position i to the end.
struct PathMetrics {
  Time tau = 0;
  std::vector<Time> prefix_tau;
  std::vector<Time> suffix_tau;

  Time prefix_at(const Path& path, EdgeIndex e) const;
  Time suffix_at(const Path& path, EdgeIndex e) const;
};

PathMetrics path_metrics(const Path& path, const Instance& inst);

// Total delay of the delayed edges of `path` under z; infinite as soon as
// one of them has infinite delay.
Delay scenario_delay(const Path& path, const Scenario& z, const Instance& inst);

// min{ delay, T - tau(P) }: the part of the dispatch window that z destroys.
// Requires tau(P) <= T.
Time capped_delay(const Path& path, const Scenario& z, const Instance& inst);

// Delay accumulated on `path` strictly before edge e. Throws
// PreconditionError if e is not on the path.
Delay prefix_delay(const Path& path, EdgeIndex e, const Scenario& z, const Instance& inst);

// Time between leaving s and entering the edge at `position` of the path
// under z, or nullopt if an infinite delay occurs before it.
std::optional<Time> entry_offset(const Path& path, std::size_t position, const Scenario& z,
                                 const Instance& inst);

}  // namespace rfot
