#include "relmp/betweenness.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace relmp {

namespace {

struct EdgeIndex {
    std::vector<std::pair<NodeId, NodeId>> edges;  // normalized u < v
    std::vector<std::vector<std::pair<NodeId, int>>> adj;  // (neighbor, edge id)
    std::vector<double> length;

    EdgeIndex(const Graph& g, bool weighted,
              const std::map<std::pair<NodeId, NodeId>, double>& lengths)
        : edges(g.edges), adj(g.node_count), length(g.edges.size(), 1.0) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& [u, v] = edges[e];
            adj[u].emplace_back(v, static_cast<int>(e));
            adj[v].emplace_back(u, static_cast<int>(e));
            if (weighted) {
                auto it = lengths.find(edges[e]);
                if (it == lengths.end()) {
                    throw std::invalid_argument("missing edge length");
                }
                if (it->second <= 0.0) {
                    throw std::invalid_argument("edge lengths must be positive");
                }
                length[e] = it->second;
            }
        }
    }
};

/// One Brandes source pass; accumulates per-edge dependencies into acc.
void brandes_source(const EdgeIndex& idx, NodeId s, bool weighted,
                    std::vector<double>& acc) {
    const int n = static_cast<int>(idx.adj.size());
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<std::pair<NodeId, int>>> preds(n);
    std::vector<NodeId> order;
    order.reserve(n);

    if (!weighted) {
        std::queue<NodeId> q;
        dist[s] = 0.0;
        sigma[s] = 1.0;
        q.push(s);
        while (!q.empty()) {
            const NodeId v = q.front();
            q.pop();
            order.push_back(v);
            for (const auto& [w, e] : idx.adj[v]) {
                if (dist[w] == std::numeric_limits<double>::infinity()) {
                    dist[w] = dist[v] + 1.0;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1.0) {
                    sigma[w] += sigma[v];
                    preds[w].emplace_back(v, e);
                }
            }
        }
    } else {
        using Item = std::pair<double, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        std::vector<char> done(n, 0);
        dist[s] = 0.0;
        sigma[s] = 1.0;
        pq.emplace(0.0, s);
        while (!pq.empty()) {
            const auto [d, v] = pq.top();
            pq.pop();
            if (done[v]) continue;
            done[v] = 1;
            order.push_back(v);
            for (const auto& [w, e] : idx.adj[v]) {
                const double nd = d + idx.length[e];
                if (nd < dist[w] - 1e-15) {
                    dist[w] = nd;
                    sigma[w] = sigma[v];
                    preds[w].assign(1, {v, e});
                    pq.emplace(nd, w);
                } else if (std::abs(nd - dist[w]) <= 1e-15) {
                    sigma[w] += sigma[v];
                    preds[w].emplace_back(v, e);
                }
            }
        }
    }

    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId w = *it;
        for (const auto& [v, e] : preds[w]) {
            const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
            acc[e] += c;
            delta[v] += c;
        }
    }
}

std::map<std::pair<NodeId, NodeId>, double> pack(
    const EdgeIndex& idx, const std::vector<double>& acc) {
    std::map<std::pair<NodeId, NodeId>, double> out;
    for (std::size_t e = 0; e < idx.edges.size(); ++e) {
        out[idx.edges[e]] = acc[e] * 0.5;  // each unordered pair counted twice
    }
    return out;
}

}  // namespace

namespace kernels {

std::map<std::pair<NodeId, NodeId>, double> edge_betweenness_serial(
    const Graph& graph, bool weighted_lengths,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths) {
    graph.validate();
    EdgeIndex idx(graph, weighted_lengths, lengths);
    std::vector<double> acc(graph.edges.size(), 0.0);
    for (NodeId s = 0; s < graph.node_count; ++s) {
        brandes_source(idx, s, weighted_lengths, acc);
    }
    return pack(idx, acc);
}

std::map<std::pair<NodeId, NodeId>, double> edge_betweenness_omp(
    const Graph& graph, bool weighted_lengths,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths) {
    graph.validate();
    EdgeIndex idx(graph, weighted_lengths, lengths);
    const int n = graph.node_count;
    const std::size_t m = graph.edges.size();

    // Per-source buffers, reduced in source order afterwards. Memory is
    // n * m doubles, fine at the scales this tool targets.
    std::vector<std::vector<double>> per_source(n, std::vector<double>(m, 0.0));
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        brandes_source(idx, s, weighted_lengths, per_source[s]);
    }
    std::vector<double> acc(m, 0.0);
    for (int s = 0; s < n; ++s) {
        for (std::size_t e = 0; e < m; ++e) acc[e] += per_source[s][e];
    }
    return pack(idx, acc);
}

}  // namespace kernels

std::map<std::pair<NodeId, NodeId>, double> edge_betweenness(
    const Graph& graph, bool weighted_lengths,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths) {
    if (graph.node_count >= 64) {
        return kernels::edge_betweenness_omp(graph, weighted_lengths, lengths);
    }
    return kernels::edge_betweenness_serial(graph, weighted_lengths, lengths);
}

}  // namespace relmp
