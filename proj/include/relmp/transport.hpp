#pragma once

#include <vector>

#include "relmp/graph.hpp"

namespace relmp {

struct TransportResult {
    double cost = 0.0;
    bool infinite = false;  // no finite-cost plan exists
};

/// Exact minimum-cost transport between two discrete measures with equal
/// total mass (transportation simplex, Bland pivoting). cost[i][j] may be
/// +infinity for forbidden routes; if every feasible plan uses one, the
/// result is flagged infinite. Supports up to 64 points per side.
TransportResult min_cost_transport(const std::vector<double>& supply,
                                   const std::vector<double>& demand,
                                   const std::vector<std::vector<double>>& cost);

/// Directed single-source shortest paths with edge weights as lengths.
/// Unreachable nodes get +infinity.
std::vector<double> dijkstra(const WeightedDigraph& graph, int source);

/// Unit-length shortest paths on an undirected graph.
std::vector<double> bfs_distances(const Graph& graph, NodeId source);

}  // namespace relmp
