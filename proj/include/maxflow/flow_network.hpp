#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace maxflow {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;
using Capacity = std::int64_t;

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  Capacity capacity = 1;
};

struct TerminalPair {
  VertexId source = 0;
  VertexId sink = 0;
};

// Arcs are stored in twin pairs: every input edge contributes a forward arc
// and a reversed twin. The twin of a directed edge has capacity 0; the twin
// of an undirected edge carries the same capacity, which lets one
// representation serve both cases. Flow is kept antisymmetric across the
// pair, so the residual network never has to be materialized.
struct Arc {
  VertexId head;
  ArcId twin;
  Capacity capacity;
  Capacity flow;
};

class FlowNetwork {
 public:
  FlowNetwork() = default;

  // Arcs are grouped by tail with a counting sort, preserving input order
  // within a vertex. Self-loops are dropped; parallel edges are kept.
  static FlowNetwork build(VertexId n, const std::vector<Edge>& edges,
                           bool directed);

  VertexId num_vertices() const { return n_; }
  ArcId num_arcs() const { return static_cast<ArcId>(arcs_.size()); }
  bool directed() const { return directed_; }

  ArcId arc_begin(VertexId u) const { return range_[u]; }
  ArcId arc_end(VertexId u) const { return range_[u + 1]; }
  ArcId range_size(VertexId u) const { return range_[u + 1] - range_[u]; }

  VertexId head(ArcId a) const { return arcs_[a].head; }
  VertexId tail(ArcId a) const { return arcs_[arcs_[a].twin].head; }
  ArcId twin(ArcId a) const { return arcs_[a].twin; }
  Capacity capacity(ArcId a) const { return arcs_[a].capacity; }
  Capacity flow(ArcId a) const { return arcs_[a].flow; }
  Capacity residual(ArcId a) const {
    return arcs_[a].capacity - arcs_[a].flow;
  }

  // Residual capacity of the twin of `a`, computed without loading the twin:
  // in an undirected network capacity(twin) == capacity(a) and
  // flow(twin) == -flow(a). Saves a memory access in backward searches.
  Capacity residual_of_incoming(ArcId a) const {
    assert(!directed_);
    return arcs_[a].capacity + arcs_[a].flow;
  }

  // Pushes delta (> 0, at most residual(a)) over `a` and pulls it back over
  // the twin. The pair is recorded in the touched list when its flow leaves
  // zero, which is what makes reset_flows sub-linear.
  void augment(ArcId a, Capacity delta) {
    assert(delta > 0);
    Arc& x = arcs_[a];
    assert(delta <= x.capacity - x.flow);
    if (x.flow == 0) touched_.push_back(a);
    x.flow += delta;
    arcs_[x.twin].flow -= delta;
    ++augment_calls_;
  }

  // Zeroes the flow on touched arc pairs only; cost is proportional to the
  // augmentation work since the previous reset, never to the arc count.
  // Returns the number of pairs visited.
  std::size_t reset_flows();

  // O(m) reset that scans every arc. Exists so benchmarks can emulate
  // solvers without touched-arc tracking.
  void clear_flows_by_scan();

  std::size_t touched_pairs() const { return touched_.size(); }
  std::uint64_t augment_calls() const { return augment_calls_; }

  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  VertexId n_ = 0;
  bool directed_ = true;
  std::vector<Arc> arcs_;
  std::vector<ArcId> range_;  // n + 1 offsets into arcs_
  std::vector<ArcId> touched_;
  std::uint64_t augment_calls_ = 0;
};

// Vertices reachable from `from` over arcs with positive residual capacity.
std::vector<std::uint8_t> residual_reachable_from(const FlowNetwork& net,
                                                  VertexId from);

// Vertices that can reach `to` over arcs with positive residual capacity.
std::vector<std::uint8_t> residual_reaching_to(const FlowNetwork& net,
                                               VertexId to);

// Total capacity of arcs leaving the marked side.
Capacity cut_capacity(const FlowNetwork& net,
                      const std::vector<std::uint8_t>& source_side);

}  // namespace maxflow
