#include "maxflow/flow_network.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace maxflow {

FlowNetwork FlowNetwork::build(VertexId n, const std::vector<Edge>& edges,
                               bool directed) {
  FlowNetwork net;
  net.n_ = n;
  net.directed_ = directed;

  std::size_t kept = 0;
  for (const Edge& e : edges) {
    if (e.tail >= n || e.head >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.tail) + " -> " +
                                  std::to_string(e.head));
    if (e.capacity < 0)
      throw std::invalid_argument("negative capacity on edge " +
                                  std::to_string(e.tail) + " -> " +
                                  std::to_string(e.head));
    if (e.tail != e.head) ++kept;  // self-loops are dropped
  }
  if (2 * kept >= std::numeric_limits<ArcId>::max())
    throw std::invalid_argument("too many edges for 32-bit arc ids");

  std::vector<ArcId> count(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.tail == e.head) continue;
    ++count[e.tail + 1];
    ++count[e.head + 1];
  }
  for (VertexId v = 0; v < n; ++v) count[v + 1] += count[v];
  net.range_ = count;  // count now holds the begin offsets

  std::vector<ArcId> cursor(net.range_.begin(), net.range_.end() - 1);
  net.arcs_.resize(2 * kept);
  for (const Edge& e : edges) {
    if (e.tail == e.head) continue;
    ArcId fwd = cursor[e.tail]++;
    ArcId rev = cursor[e.head]++;
    net.arcs_[fwd] = Arc{e.head, rev, e.capacity, 0};
    net.arcs_[rev] = Arc{e.tail, fwd, directed ? 0 : e.capacity, 0};
  }
  return net;
}

std::size_t FlowNetwork::reset_flows() {
  std::size_t visited = touched_.size();
  for (ArcId a : touched_) {
    arcs_[a].flow = 0;
    arcs_[arcs_[a].twin].flow = 0;
  }
  touched_.clear();
  return visited;
}

void FlowNetwork::clear_flows_by_scan() {
  for (Arc& a : arcs_) a.flow = 0;
  touched_.clear();
}

std::vector<std::uint8_t> residual_reachable_from(const FlowNetwork& net,
                                                  VertexId from) {
  std::vector<std::uint8_t> seen(net.num_vertices(), 0);
  std::vector<VertexId> queue;
  queue.reserve(64);
  queue.push_back(from);
  seen[from] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId u = queue[i];
    for (ArcId a = net.arc_begin(u); a != net.arc_end(u); ++a) {
      VertexId v = net.head(a);
      if (!seen[v] && net.residual(a) > 0) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

std::vector<std::uint8_t> residual_reaching_to(const FlowNetwork& net,
                                               VertexId to) {
  std::vector<std::uint8_t> seen(net.num_vertices(), 0);
  std::vector<VertexId> queue;
  queue.reserve(64);
  queue.push_back(to);
  seen[to] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId u = queue[i];
    // v reaches u over the twin of an out-arc of u.
    for (ArcId a = net.arc_begin(u); a != net.arc_end(u); ++a) {
      VertexId v = net.head(a);
      if (!seen[v] && net.residual(net.twin(a)) > 0) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

Capacity cut_capacity(const FlowNetwork& net,
                      const std::vector<std::uint8_t>& source_side) {
  Capacity total = 0;
  for (VertexId u = 0; u < net.num_vertices(); ++u) {
    if (!source_side[u]) continue;
    for (ArcId a = net.arc_begin(u); a != net.arc_end(u); ++a)
      if (!source_side[net.head(a)]) total += net.capacity(a);
  }
  return total;
}

}  // namespace maxflow
