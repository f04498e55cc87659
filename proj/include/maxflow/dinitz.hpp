#pragma once

#include <cstdint>
#include <vector>

#include "maxflow/flow_network.hpp"
#include "maxflow/stats.hpp"

namespace maxflow {

inline constexpr std::uint32_t kNoDistance = 0xffffffffu;

// Per-vertex search state, interleaved so that all data for one vertex is
// fetched together. The stamps tie the validity of the other fields to a
// round counter, which lets the optimized solver skip per-round
// initialization entirely.
struct VertexSearchData {
  std::uint32_t dist_s;
  std::uint32_t dist_t;
  ArcId next_arc;
  std::uint64_t stamp_s;
  std::uint64_t stamp_t;
};

struct SearchLabels {
  std::vector<VertexSearchData> data;
  std::vector<VertexId> queue;  // pre-allocated; each vertex enters at most once
  std::uint64_t round = 0;

  void ensure(VertexId n) {
    if (data.size() < n) {
      data.resize(n, VertexSearchData{kNoDistance, kNoDistance, 0, 0, 0});
      queue.resize(n);
    }
  }
};

// Baseline Dinitz: per round, a unidirectional BFS from the source labels
// the residual network and a repeated DFS with per-vertex next-arc counters
// augments a blocking flow. Distances and counters are re-initialized each
// round. The BFS finishes the layer in which the sink is discovered rather
// than breaking out early, so search-space measurements are comparable
// across solvers.
class DinitzSolver {
 public:
  FlowResult max_flow(FlowNetwork& net, TerminalPair pair);

  // Source side of a minimum cut: vertices reachable from the source in the
  // residual network. Requires a completed max_flow on this network.
  CutResult min_cut_source_side(const FlowNetwork& net, TerminalPair pair);

  // Round primitives; max_flow is the standard loop over these.
  bool bfs_layered(const FlowNetwork& net, TerminalPair pair,
                   SearchSpaceStats& stats);
  Capacity blocking_flow(FlowNetwork& net, TerminalPair pair,
                         SearchSpaceStats& stats);

  const SearchLabels& labels() const { return labels_; }

 private:
  void init_round(const FlowNetwork& net, SearchSpaceStats& stats);
  bool bfs_core(const FlowNetwork& net, TerminalPair pair,
                SearchSpaceStats& stats);

  SearchLabels labels_;
  std::vector<ArcId> path_;
  bool flow_computed_ = false;
};

}  // namespace maxflow
