#include "relmp/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "relmp/betweenness.hpp"
#include "relmp/matrix.hpp"
#include "relmp/transport.hpp"

namespace relmp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix weight_matrix(const WeightedDigraph& g) {
    Matrix w(g.node_count, g.node_count);
    for (const auto& [key, weight] : g.edges) {
        w(key.first, key.second) = weight;
    }
    return w;
}

}  // namespace

EdgeCurvatureReport efc(const WeightedDigraph& graph, int tau, int sigma) {
    if (!graph.has_edge(tau, sigma)) {
        throw std::invalid_argument("efc: edge tau->sigma missing");
    }
    const int n = graph.node_count;
    const Matrix w = weight_matrix(graph);

    EdgeCurvatureReport report;
    report.edge = {tau, sigma};
    report.edge_weight = w(tau, sigma);
    for (int x = 0; x < n; ++x) report.w_out += w(tau, x);
    for (int x = 0; x < n; ++x) report.w_in += w(x, sigma);
    // Fixed xi order keeps the sums identical to the brute-force oracle.
    for (int xi = 0; xi < n; ++xi) {
        report.w_t += w(tau, xi) * w(xi, sigma);
    }
    for (int x1 = 0; x1 < n; ++x1) {
        if (w(tau, x1) == 0.0) continue;
        for (int x2 = 0; x2 < n; ++x2) {
            report.w_f += w(tau, x1) * w(x1, x2) * w(x2, sigma);
        }
    }
    report.value = 4.0 - report.w_out - report.w_in + 3.0 * report.w_t + 2.0 * report.w_f;
    return report;
}

LocalGeometryCheck prop_local_geometry_check(const WeightedDigraph& graph_from_b,
                                             int tau, int sigma,
                                             const std::vector<double>& alphas,
                                             const std::vector<double>& betas) {
    const EdgeCurvatureReport r = efc(graph_from_b, tau, sigma);
    double prod = 1.0;
    for (std::size_t l = 0; l < alphas.size() && l < betas.size(); ++l) {
        prod *= alphas[l] * betas[l];
    }
    LocalGeometryCheck check;
    check.lhs = prod * r.w_t;  // (B^2)_{sigma,tau} equals w_T on G(S,B)
    check.rhs = prod / 3.0 * (r.value + r.w_out + r.w_in - 4.0);
    check.holds = check.lhs <= check.rhs + 1e-9;
    return check;
}

EdgeCurvatureReport orc_directed(const WeightedDigraph& graph, int sigma, int tau) {
    const double edge_w = graph.weight(sigma, tau);
    if (edge_w <= 0.0) {
        throw std::invalid_argument("orc_directed: edge sigma->tau missing");
    }
    const auto in_adj = graph.in_adjacency();
    const auto out_adj = graph.out_adjacency();
    const auto& in_nbrs = in_adj[sigma];   // (xi, w(xi->sigma))
    const auto& out_nbrs = out_adj[tau];   // (eta, w(tau->eta))
    double in_mass = 0.0, out_mass = 0.0;
    for (const auto& [xi, w] : in_nbrs) in_mass += w;
    for (const auto& [eta, w] : out_nbrs) out_mass += w;
    if (in_mass <= 0.0 || out_mass <= 0.0) {
        throw std::invalid_argument("orc_directed: undefined measure (zero in/out mass)");
    }
    if (in_nbrs.size() > 64 || out_nbrs.size() > 64) {
        throw std::invalid_argument("orc_directed: support exceeds 64 points");
    }

    std::vector<double> mu(in_nbrs.size()), nu(out_nbrs.size());
    for (std::size_t i = 0; i < in_nbrs.size(); ++i) mu[i] = in_nbrs[i].second / in_mass;
    for (std::size_t j = 0; j < out_nbrs.size(); ++j) nu[j] = out_nbrs[j].second / out_mass;

    std::vector<std::vector<double>> cost(in_nbrs.size(),
                                          std::vector<double>(out_nbrs.size()));
    for (std::size_t i = 0; i < in_nbrs.size(); ++i) {
        const auto dist = dijkstra(graph, in_nbrs[i].first);
        for (std::size_t j = 0; j < out_nbrs.size(); ++j) {
            cost[i][j] = dist[out_nbrs[j].first];
        }
    }

    const TransportResult t = min_cost_transport(mu, nu, cost);
    EdgeCurvatureReport report;
    report.edge = {sigma, tau};
    report.edge_weight = edge_w;
    report.wasserstein = t.cost;
    report.infinite = t.infinite;
    report.value = t.infinite ? -kInf : 1.0 - t.cost / edge_w;
    return report;
}

double orc_undirected(const Graph& graph, NodeId u, NodeId v) {
    if (!graph.has_edge(u, v)) throw std::invalid_argument("orc: edge missing");
    const auto adj = graph.adjacency();
    if (adj[u].empty() || adj[v].empty()) {
        throw std::invalid_argument("orc: isolated endpoint");
    }
    std::vector<double> mu(adj[u].size(), 1.0 / adj[u].size());
    std::vector<double> nu(adj[v].size(), 1.0 / adj[v].size());
    std::vector<std::vector<double>> cost(adj[u].size(),
                                          std::vector<double>(adj[v].size()));
    for (std::size_t i = 0; i < adj[u].size(); ++i) {
        const auto dist = bfs_distances(graph, adj[u][i]);
        for (std::size_t j = 0; j < adj[v].size(); ++j) {
            cost[i][j] = dist[adj[v][j]];
        }
    }
    const TransportResult t = min_cost_transport(mu, nu, cost);
    if (t.infinite) throw std::runtime_error("orc: disconnected neighbor supports");
    return 1.0 - t.cost;
}

double bfc(const Graph& graph, NodeId u, NodeId v) {
    if (!graph.has_edge(u, v)) throw std::invalid_argument("bfc: edge missing");
    const auto adj = graph.adjacency();
    const double du = static_cast<double>(adj[u].size());
    const double dv = static_cast<double>(adj[v].size());
    if (std::min(du, dv) <= 1.0) return 0.0;

    std::set<NodeId> nu_set(adj[u].begin(), adj[u].end());
    std::set<NodeId> nv_set(adj[v].begin(), adj[v].end());

    std::vector<NodeId> triangles;
    for (NodeId k : adj[u]) {
        if (nv_set.count(k)) triangles.push_back(k);
    }
    const double tri = static_cast<double>(triangles.size());

    // Degree-4 square neighbors: k completes a diagonal-free 4-cycle
    // u ~ k ~ w ~ v with k not adjacent to v and w not adjacent to u.
    auto square_side = [&](NodeId a, NodeId b, const std::set<NodeId>& na,
                           const std::set<NodeId>& nb) {
        std::vector<std::pair<NodeId, int>> squares;  // (k, #4-cycles via k)
        for (NodeId k : adj[a]) {
            if (k == b || nb.count(k)) continue;
            int cycles = 0;
            for (NodeId w : adj[k]) {
                if (w == a || w == b) continue;
                if (nb.count(w) && !na.count(w)) ++cycles;
            }
            if (cycles > 0) squares.emplace_back(k, cycles);
        }
        return squares;
    };
    const auto sq_u = square_side(u, v, nu_set, nv_set);
    const auto sq_v = square_side(v, u, nv_set, nu_set);

    double value = 2.0 / du + 2.0 / dv - 2.0 + 2.0 * tri / std::max(du, dv) +
                   tri / std::min(du, dv);
    if (!sq_u.empty() || !sq_v.empty()) {
        int gamma_max = 0;
        for (const auto& [k, c] : sq_u) gamma_max = std::max(gamma_max, c);
        for (const auto& [k, c] : sq_v) gamma_max = std::max(gamma_max, c);
        const double squares =
            static_cast<double>(sq_u.size()) + static_cast<double>(sq_v.size());
        value += squares / (gamma_max * std::max(du, dv));
    }
    return value;
}

double afc(const Graph& graph, NodeId u, NodeId v, AfcVariant variant) {
    if (!graph.has_edge(u, v)) throw std::invalid_argument("afc: edge missing");
    const auto adj = graph.adjacency();
    const double du = static_cast<double>(adj[u].size());
    const double dv = static_cast<double>(adj[v].size());
    std::set<NodeId> nv_set(adj[v].begin(), adj[v].end());
    double tri = 0.0;
    for (NodeId k : adj[u]) {
        if (nv_set.count(k)) tri += 1.0;
    }
    double value = 4.0 - du - dv + 3.0 * tri;
    if (variant == AfcVariant::afc4) {
        double quads = 0.0;
        for (NodeId k : adj[u]) {
            if (k == v) continue;
            for (NodeId w : adj[v]) {
                if (w == u || w == k) continue;
                if (graph.has_edge(k, w)) quads += 1.0;
            }
        }
        value += 2.0 * quads;
    }
    return value;
}

WeightedCurvatureSummary weighted_curvature(
    const Graph& graph,
    const std::function<double(NodeId, NodeId)>& curvature_fn,
    bool weighted_lengths,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths) {
    const auto bc = edge_betweenness(graph, weighted_lengths, lengths);
    WeightedCurvatureSummary out;
    for (const auto& [u, v] : graph.edges) {
        const double c = curvature_fn(u, v);
        const double b = bc.at({u, v});
        out.wc += b * c;
        if (c < 0.0) out.nwc += b * c;
    }
    return out;
}

std::vector<std::pair<std::pair<NodeId, NodeId>, double>> curvature_distribution(
    const Graph& graph, GraphCurvatureKind kind) {
    std::vector<std::pair<std::pair<NodeId, NodeId>, double>> out(graph.edges.size());
    const long m = static_cast<long>(graph.edges.size());
#pragma omp parallel for schedule(dynamic)
    for (long e = 0; e < m; ++e) {
        const auto& [u, v] = graph.edges[e];
        double value = 0.0;
        switch (kind) {
            case GraphCurvatureKind::orc: value = orc_undirected(graph, u, v); break;
            case GraphCurvatureKind::bfc: value = bfc(graph, u, v); break;
            case GraphCurvatureKind::afc3: value = afc(graph, u, v, AfcVariant::afc3); break;
            case GraphCurvatureKind::afc4: value = afc(graph, u, v, AfcVariant::afc4); break;
        }
        out[e] = {{u, v}, value};
    }
    return out;
}

std::vector<std::pair<std::pair<int, int>, double>> curvature_distribution(
    const WeightedDigraph& graph, DigraphCurvatureKind kind) {
    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(graph.edges.size());
    for (const auto& [key, w] : graph.edges) edge_list.push_back(key);
    std::vector<std::pair<std::pair<int, int>, double>> out(edge_list.size());
    const long m = static_cast<long>(edge_list.size());
#pragma omp parallel for schedule(dynamic)
    for (long e = 0; e < m; ++e) {
        const auto& [src, dst] = edge_list[e];
        double value = 0.0;
        switch (kind) {
            case DigraphCurvatureKind::efc:
                value = efc(graph, src, dst).value;
                break;
            case DigraphCurvatureKind::orc_directed:
                value = orc_directed(graph, src, dst).value;
                break;
        }
        out[e] = {{src, dst}, value};
    }
    return out;
}

double w_max3(const WeightedDigraph& graph, int sigma, int tau) {
    const double mid = graph.weight(sigma, tau);
    if (mid <= 0.0) throw std::invalid_argument("w_max3: edge sigma->tau missing");
    const auto in_adj = graph.in_adjacency();
    const auto out_adj = graph.out_adjacency();
    double best = 0.0;
    for (const auto& [xi, w_in] : in_adj[sigma]) {
        for (const auto& [eta, w_out] : out_adj[tau]) {
            best = std::max(best, w_in + mid + w_out);
        }
    }
    return best;
}

}  // namespace relmp
