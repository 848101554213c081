#include "relmp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace relmp {

void Graph::add_edge(NodeId u, NodeId v) {
    if (u == v) throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.insert(it, e);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<NodeId>> Graph::adjacency() const {
    std::vector<std::vector<NodeId>> adj(node_count);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(node_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

void Graph::validate() const {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) throw std::invalid_argument("edge not normalized");
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] <= edges[i - 1]) throw std::invalid_argument("edges not sorted/unique");
    }
    if (!features.empty()) {
        if (static_cast<int>(features.size()) != node_count) {
            throw std::invalid_argument("feature row count != node count");
        }
        const std::size_t dim = features[0].size();
        for (const auto& f : features) {
            if (f.size() != dim) throw std::invalid_argument("inconsistent feature dimensions");
        }
    }
}

void WeightedDigraph::add_edge(int src, int dst, double w) {
    if (w <= 0.0) throw std::invalid_argument("edge weight must be positive");
    auto [it, inserted] = edges.emplace(std::make_pair(src, dst), w);
    if (!inserted) throw std::invalid_argument("duplicate directed edge");
}

double WeightedDigraph::weight(int src, int dst) const {
    auto it = edges.find({src, dst});
    return it == edges.end() ? 0.0 : it->second;
}

bool WeightedDigraph::has_edge(int src, int dst) const {
    return edges.count({src, dst}) > 0;
}

std::vector<std::vector<std::pair<int, double>>> WeightedDigraph::out_adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(node_count);
    for (const auto& [key, w] : edges) adj[key.first].emplace_back(key.second, w);
    return adj;
}

std::vector<std::vector<std::pair<int, double>>> WeightedDigraph::in_adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(node_count);
    for (const auto& [key, w] : edges) adj[key.second].emplace_back(key.first, w);
    return adj;
}

double WeightedDigraph::out_weight(int node) const {
    double s = 0.0;
    for (auto it = edges.lower_bound({node, 0});
         it != edges.end() && it->first.first == node; ++it) {
        s += it->second;
    }
    return s;
}

double WeightedDigraph::in_weight(int node) const {
    double s = 0.0;
    for (const auto& [key, w] : edges) {
        if (key.second == node) s += w;
    }
    return s;
}

Graph WeightedDigraph::undirected_support() const {
    Graph g;
    g.node_count = node_count;
    std::set<std::pair<int, int>> seen;
    for (const auto& [key, w] : edges) {
        auto [u, v] = key;
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        seen.emplace(u, v);
    }
    g.edges.assign(seen.begin(), seen.end());
    return g;
}

void WeightedDigraph::validate() const {
    for (const auto& [key, w] : edges) {
        if (key.first < 0 || key.first >= node_count || key.second < 0 ||
            key.second >= node_count) {
            throw std::invalid_argument("digraph endpoint out of range");
        }
        if (w <= 0.0) throw std::invalid_argument("nonpositive edge weight");
    }
}

}  // namespace relmp
