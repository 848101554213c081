#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace relmp {

using NodeId = int;

/// Simple undirected graph with optional per-node features. Immutable by
/// convention after construction; validate() enforces the invariants.
struct Graph {
    int node_count = 0;
    std::vector<std::pair<NodeId, NodeId>> edges;  // u < v, sorted, unique
    std::vector<std::vector<double>> features;     // empty or node_count rows

    void add_edge(NodeId u, NodeId v);
    bool has_edge(NodeId u, NodeId v) const;
    std::vector<std::vector<NodeId>> adjacency() const;
    std::vector<int> degrees() const;

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;
};

/// Weighted directed graph keyed by (src, dst). The influence-graph form that
/// curvature and rewiring operate on; weights are strictly positive.
struct WeightedDigraph {
    int node_count = 0;
    std::map<std::pair<int, int>, double> edges;

    void add_edge(int src, int dst, double w);
    double weight(int src, int dst) const;  // 0 when absent
    bool has_edge(int src, int dst) const;

    std::vector<std::vector<std::pair<int, double>>> out_adjacency() const;
    std::vector<std::vector<std::pair<int, double>>> in_adjacency() const;

    double out_weight(int node) const;
    double in_weight(int node) const;

    /// Undirected simple support: u ~ v iff either direction carries weight,
    /// self-loops dropped.
    Graph undirected_support() const;

    void validate() const;
};

}  // namespace relmp
