#include "maxflow/dinitz.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace maxflow {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t us_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                            start)
          .count());
}

}  // namespace

void DinitzSolver::init_round(const FlowNetwork& net,
                              SearchSpaceStats& stats) {
  const VertexId n = net.num_vertices();
  labels_.ensure(n);
  ++labels_.round;
  for (VertexId v = 0; v < n; ++v) {
    labels_.data[v].dist_s = kNoDistance;
    labels_.data[v].next_arc = net.arc_begin(v);
  }
  stats.label_writes += n;
}

bool DinitzSolver::bfs_core(const FlowNetwork& net, TerminalPair pair,
                            SearchSpaceStats& stats) {
  std::uint64_t scans = 0;
  auto& q = labels_.queue;
  q[0] = pair.source;
  labels_.data[pair.source].dist_s = 0;
  std::size_t layer_begin = 0, layer_end = 1, filled = 1;
  bool sink_seen = false;

  while (!sink_seen && layer_begin < layer_end) {
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      VertexId u = q[i];
      std::uint32_t du = labels_.data[u].dist_s;
      for (ArcId a = net.arc_begin(u); a != net.arc_end(u); ++a) {
        ++scans;
        if (net.residual(a) <= 0) continue;
        VertexId v = net.head(a);
        if (labels_.data[v].dist_s != kNoDistance) continue;
        labels_.data[v].dist_s = du + 1;
        ++stats.label_writes;
        q[filled++] = v;
        if (v == pair.sink) sink_seen = true;
      }
    }
    layer_begin = layer_end;
    layer_end = filled;
  }

  stats.bfs_edges.push_back(scans);
  stats.forward_edges += scans;
  if (sink_seen) stats.st_distance.push_back(labels_.data[pair.sink].dist_s);
  return sink_seen;
}

bool DinitzSolver::bfs_layered(const FlowNetwork& net, TerminalPair pair,
                               SearchSpaceStats& stats) {
  init_round(net, stats);
  return bfs_core(net, pair, stats);
}

Capacity DinitzSolver::blocking_flow(FlowNetwork& net, TerminalPair pair,
                                     SearchSpaceStats& stats) {
  auto& data = labels_.data;
  std::uint64_t scans = 0;
  Capacity added = 0;
  path_.clear();
  VertexId u = pair.source;

  for (;;) {
    if (u == pair.sink) {
      Capacity bottleneck = net.residual(path_[0]);
      for (ArcId a : path_) bottleneck = std::min(bottleneck, net.residual(a));
      for (ArcId a : path_) net.augment(a, bottleneck);
      added += bottleneck;
      ++stats.augmenting_paths;
      // Retreat to the tail of the first saturated arc.
      std::size_t cut = 0;
      while (net.residual(path_[cut]) > 0) ++cut;
      u = net.tail(path_[cut]);
      path_.resize(cut);
      continue;
    }

    ArcId& cursor = data[u].next_arc;
    const ArcId end = net.arc_end(u);
    bool advanced = false;
    while (cursor != end) {
      ++scans;
      VertexId v = net.head(cursor);
      if (net.residual(cursor) > 0 && data[v].dist_s != kNoDistance &&
          data[u].dist_s + 1 == data[v].dist_s) {
        path_.push_back(cursor);
        u = v;
        advanced = true;
        break;
      }
      ++cursor;
    }
    if (advanced) continue;

    if (u == pair.source) break;
    // Dead end: drop the arc that led here.
    ArcId back = path_.back();
    path_.pop_back();
    u = net.tail(back);
    ++data[u].next_arc;
  }

  stats.dfs_edges.push_back(scans);
  stats.flow_per_round.push_back(static_cast<std::uint64_t>(added));
  return added;
}

FlowResult DinitzSolver::max_flow(FlowNetwork& net, TerminalPair pair) {
  assert(pair.source != pair.sink);
  FlowResult result;
  const auto total_start = Clock::now();

  for (;;) {
    ++result.rounds;
    const auto init_start = Clock::now();
    init_round(net, result.stats);
    result.times.init_us += us_since(init_start);

    const auto bfs_start = Clock::now();
    bool reachable = bfs_core(net, pair, result.stats);
    result.times.bfs_us += us_since(bfs_start);
    if (!reachable) break;

    const auto dfs_start = Clock::now();
    result.value += blocking_flow(net, pair, result.stats);
    result.times.dfs_us += us_since(dfs_start);
  }

  result.times.flow_us =
      result.times.init_us + result.times.bfs_us + result.times.dfs_us;
  result.times.total_us = us_since(total_start);
  flow_computed_ = true;
  return result;
}

CutResult DinitzSolver::min_cut_source_side(const FlowNetwork& net,
                                            TerminalPair pair) {
  assert(flow_computed_);
  CutResult cut;
  cut.source_side = residual_reachable_from(net, pair.source);
  assert(!cut.source_side[pair.sink]);
  for (ArcId a = net.arc_begin(pair.source); a != net.arc_end(pair.source);
       ++a)
    cut.value += net.flow(a);
  return cut;
}

}  // namespace maxflow
