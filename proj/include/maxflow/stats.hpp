#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "maxflow/flow_network.hpp"

namespace maxflow {

// Deterministic arc-scan counters. Every inspection of an arc during a
// search counts as one event, whether or not the arc is usable, so the
// numbers are a hardware-independent cost measure. The region counters
// split the per-round scan volume into the part explored by the forward
// search, the part explored by the backward search, the out-arc volume of
// the still unexplored fringe of either side, and of the fringe vertices
// seen by both sides.
struct SearchSpaceStats {
  std::vector<std::uint64_t> bfs_edges;       // per round
  std::vector<std::uint64_t> dfs_edges;       // per round
  std::vector<std::uint64_t> flow_per_round;  // augmenting rounds only
  std::vector<std::uint32_t> st_distance;     // per reachable round

  std::uint64_t forward_edges = 0;
  std::uint64_t backward_edges = 0;
  std::uint64_t next_forward_edges = 0;
  std::uint64_t next_backward_edges = 0;
  std::uint64_t intersection_edges = 0;

  std::uint64_t augmenting_paths = 0;
  std::uint64_t label_writes = 0;  // per-vertex initialization events

  // push-relabel counters
  std::uint64_t pushes = 0;
  std::uint64_t relabels = 0;
  std::uint64_t gap_events = 0;
  bool gap_relabeling = false;
  bool global_relabeling = false;

  std::uint64_t bfs_total() const {
    return std::accumulate(bfs_edges.begin(), bfs_edges.end(),
                           std::uint64_t{0});
  }
  std::uint64_t dfs_total() const {
    return std::accumulate(dfs_edges.begin(), dfs_edges.end(),
                           std::uint64_t{0});
  }
  std::uint64_t total_edges() const { return bfs_total() + dfs_total(); }
};

// Per-flow wall-clock stages in microseconds (monotonic clock; anything
// below one microsecond is noise).
struct StageTimes {
  std::uint64_t build_us = 0;
  std::uint64_t reset_us = 0;
  std::uint64_t init_us = 0;
  std::uint64_t bfs_us = 0;
  std::uint64_t dfs_us = 0;
  std::uint64_t flow_us = 0;
  std::uint64_t total_us = 0;
};

struct FlowResult {
  Capacity value = 0;
  std::uint32_t rounds = 0;
  SearchSpaceStats stats;
  StageTimes times;
};

struct CutResult {
  Capacity value = 0;
  std::vector<std::uint8_t> source_side;  // one flag per vertex

  bool contains(VertexId v) const { return source_side[v] != 0; }
};

}  // namespace maxflow
