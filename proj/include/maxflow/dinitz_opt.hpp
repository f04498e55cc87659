#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maxflow/dinitz.hpp"
#include "maxflow/flow_network.hpp"
#include "maxflow/stats.hpp"

namespace maxflow {

struct DinitzOptOptions {
  // Initialize labels and counters lazily through round stamps instead of
  // filling whole arrays every round.
  bool lazy_init = true;
  // Keep the DFS out of forward-fringe vertices the backward search never
  // saw; such vertices cannot lie on a shortest source-sink path.
  bool skip_next_forward_layer = true;
};

// State of the balanced bidirectional BFS. Each queue holds the vertices
// discovered by one side in layer order; [layer_begin, layer_end) is the
// slice still awaiting expansion. forward_cost/backward_cost are the out-arc
// volumes of those pending slices, i.e. what one more layer would cost.
struct BidirFrontier {
  std::vector<VertexId> forward_queue;
  std::vector<VertexId> backward_queue;
  std::size_t f_layer_begin = 0, f_layer_end = 0;
  std::size_t b_layer_begin = 0, b_layer_end = 0;
  std::uint64_t forward_cost = 0;
  std::uint64_t backward_cost = 0;
  std::uint32_t forward_layers = 0;   // expansions performed by each side;
  std::uint32_t backward_layers = 0;  // also the depth of the pending layer
};

// Cost to expand a frontier: the summed out-arc-range sizes of its vertices.
std::uint64_t layer_cost(const FlowNetwork& net,
                         std::span<const VertexId> frontier);

// Dinitz with a balanced bidirectional BFS. Per round the search advances
// whichever side is cheaper to push one layer, and stops once a vertex is
// seen from both sides (finishing the layer, so no shortest path is
// missed). The DFS then treats an arc as admissible when it increases the
// distance from the source or decreases the distance to the sink.
class DinitzOptSolver {
 public:
  explicit DinitzOptSolver(DinitzOptOptions options = {})
      : options_(options) {}

  FlowResult max_flow(FlowNetwork& net, TerminalPair pair);
  CutResult min_cut_source_side(const FlowNetwork& net, TerminalPair pair);

  bool bidir_bfs(const FlowNetwork& net, TerminalPair pair,
                 SearchSpaceStats& stats);
  Capacity blocking_flow_bidir(FlowNetwork& net, TerminalPair pair,
                               SearchSpaceStats& stats);

  // Label rule alone: residual > 0 and (dist_s(u)+1 == dist_s(v) or
  // dist_t(u)-1 == dist_t(v)), unset labels acting as infinity.
  bool arc_admissible(const FlowNetwork& net, VertexId u, ArcId a) const;
  // What the DFS actually follows: the label rule plus the fringe-skip.
  bool dfs_admissible(const FlowNetwork& net, VertexId u, ArcId a) const;

  const SearchLabels& labels() const { return labels_; }
  const BidirFrontier& frontier() const { return frontier_; }
  const DinitzOptOptions& options() const { return options_; }

 private:
  enum class Side { kForward, kBackward };

  void prepare_round(const FlowNetwork& net, SearchSpaceStats& stats);
  // Expands the pending layer of one side; returns true if a vertex already
  // seen by the other side was discovered.
  bool expand_layer(const FlowNetwork& net, Side side,
                    SearchSpaceStats& stats);
  void record_regions(const FlowNetwork& net, SearchSpaceStats& stats) const;

  DinitzOptOptions options_;
  SearchLabels labels_;
  BidirFrontier frontier_;
  std::vector<ArcId> path_;
  std::uint32_t meet_distance_ = 0;
  bool flow_computed_ = false;
};

}  // namespace maxflow
