#pragma once

#include <map>
#include <utility>

#include "relmp/graph.hpp"

namespace relmp {

/// Edge betweenness centrality (Brandes). Unit edge lengths by default;
/// weighted_lengths switches the shortest-path metric to the given positive
/// edge lengths. Each unordered pair of endpoints is counted once.
std::map<std::pair<NodeId, NodeId>, double> edge_betweenness(
    const Graph& graph, bool weighted_lengths = false,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths = {});

namespace kernels {

/// Serial reference: sources processed one by one.
std::map<std::pair<NodeId, NodeId>, double> edge_betweenness_serial(
    const Graph& graph, bool weighted_lengths,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths);

/// OpenMP variant: sources processed in parallel into per-source buffers,
/// reduced in source order so the floating-point result matches the serial
/// kernel bit for bit at any thread count.
std::map<std::pair<NodeId, NodeId>, double> edge_betweenness_omp(
    const Graph& graph, bool weighted_lengths,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths);

}  // namespace kernels

}  // namespace relmp
