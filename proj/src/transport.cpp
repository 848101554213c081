#include "relmp/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace relmp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = 1e-12;

struct BasisCell {
    int i, j;
    double mass;
};

}  // namespace

TransportResult min_cost_transport(const std::vector<double>& supply,
                                   const std::vector<double>& demand,
                                   const std::vector<std::vector<double>>& cost) {
    const int m = static_cast<int>(supply.size());
    const int n = static_cast<int>(demand.size());
    if (m == 0 || n == 0) throw std::invalid_argument("empty transport problem");
    if (m > 64 || n > 64) throw std::invalid_argument("transport supports at most 64 points per side");
    if (static_cast<int>(cost.size()) != m) throw std::invalid_argument("cost rows != supply size");
    for (const auto& row : cost) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("cost cols != demand size");
    }
    double total_s = 0.0, total_d = 0.0;
    for (double s : supply) {
        if (s < -kEps) throw std::invalid_argument("negative supply");
        total_s += s;
    }
    for (double d : demand) {
        if (d < -kEps) throw std::invalid_argument("negative demand");
        total_d += d;
    }
    if (std::fabs(total_s - total_d) > 1e-9 * std::max(1.0, total_s)) {
        throw std::invalid_argument("supply/demand totals differ");
    }

    // Forbidden routes get a large finite surrogate; a plan is infinite only
    // if it still keeps mass on one of them at optimality.
    double max_finite = 0.0;
    for (const auto& row : cost) {
        for (double c : row) {
            if (std::isfinite(c)) max_finite = std::max(max_finite, std::fabs(c));
        }
    }
    const double big = (max_finite + 1.0) * 1e6;
    auto c_at = [&](int i, int j) {
        const double c = cost[i][j];
        return std::isfinite(c) ? c : big;
    };

    // --- Northwest-corner initial basis: exactly m+n-1 cells forming a
    // staircase path (zero allocations kept for degenerate steps).
    std::vector<BasisCell> basis;
    {
        std::vector<double> a = supply, b = demand;
        int i = 0, j = 0;
        while (true) {
            const double x = std::min(a[i], b[j]);
            basis.push_back({i, j, x});
            a[i] -= x;
            b[j] -= x;
            if (i == m - 1 && j == n - 1) break;
            if (a[i] <= kEps && i < m - 1) {
                ++i;
            } else if (j < n - 1) {
                ++j;
            } else {
                ++i;
            }
        }
        if (static_cast<int>(basis.size()) != m + n - 1) {
            throw std::runtime_error("transport initialization lost basis cells");
        }
    }

    std::vector<std::vector<int>> basis_at(m, std::vector<int>(n, -1));
    auto rebuild_index = [&]() {
        for (auto& row : basis_at) std::fill(row.begin(), row.end(), -1);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            basis_at[basis[k].i][basis[k].j] = static_cast<int>(k);
        }
    };
    rebuild_index();

    const int max_pivots = 200000;
    for (int pivot = 0; pivot < max_pivots; ++pivot) {
        // Potentials from the basis tree: u_i + v_j = c_ij on basic cells.
        std::vector<double> u(m, 0.0), v(n, 0.0);
        std::vector<char> u_set(m, 0), v_set(n, 0);
        u_set[0] = 1;
        for (int changed = 1; changed;) {
            changed = 0;
            for (const BasisCell& bc : basis) {
                if (u_set[bc.i] && !v_set[bc.j]) {
                    v[bc.j] = c_at(bc.i, bc.j) - u[bc.i];
                    v_set[bc.j] = 1;
                    changed = 1;
                } else if (!u_set[bc.i] && v_set[bc.j]) {
                    u[bc.i] = c_at(bc.i, bc.j) - v[bc.j];
                    u_set[bc.i] = 1;
                    changed = 1;
                }
            }
        }

        // Bland's rule: first cell (row-major) with negative reduced cost.
        int ei = -1, ej = -1;
        for (int i = 0; i < m && ei < 0; ++i) {
            for (int j = 0; j < n; ++j) {
                if (basis_at[i][j] >= 0) continue;
                if (c_at(i, j) - u[i] - v[j] < -1e-10 * std::max(1.0, max_finite)) {
                    ei = i;
                    ej = j;
                    break;
                }
            }
        }
        if (ei < 0) break;  // optimal

        // Unique alternating cycle through (ei, ej) in the basis tree. BFS
        // over the bipartite basis graph from row ei to column ej.
        std::vector<std::vector<std::pair<int, int>>> row_cells(m), col_cells(n);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            row_cells[basis[k].i].push_back({basis[k].j, static_cast<int>(k)});
            col_cells[basis[k].j].push_back({basis[k].i, static_cast<int>(k)});
        }
        // Node encoding: rows 0..m-1, cols m..m+n-1.
        std::vector<int> prev_node(m + n, -2), prev_cell(m + n, -1);
        std::queue<int> q;
        q.push(ei);
        prev_node[ei] = -1;
        while (!q.empty()) {
            const int node = q.front();
            q.pop();
            if (node < m) {
                for (const auto& [j, k] : row_cells[node]) {
                    if (prev_node[m + j] == -2) {
                        prev_node[m + j] = node;
                        prev_cell[m + j] = k;
                        q.push(m + j);
                    }
                }
            } else {
                for (const auto& [i, k] : col_cells[node - m]) {
                    if (prev_node[i] == -2) {
                        prev_node[i] = node;
                        prev_cell[i] = k;
                        q.push(i);
                    }
                }
            }
        }
        if (prev_node[m + ej] == -2) {
            throw std::runtime_error("transport basis lost connectivity");
        }
        // Path cells from ej back to ei; odd positions (0-based even index in
        // the cycle starting at the entering cell) receive -theta.
        std::vector<int> path_cells;
        for (int node = m + ej; prev_node[node] != -1; node = prev_node[node]) {
            path_cells.push_back(prev_cell[node]);
        }
        // Cycle = entering cell (+), then alternating (-,+,-,...) along path.
        double theta = kInf;
        int leave_k = -1;
        for (std::size_t idx = 0; idx < path_cells.size(); idx += 2) {
            const BasisCell& bc = basis[path_cells[idx]];
            const bool smaller = bc.mass < theta - kEps;
            const bool tie_lower =
                bc.mass < theta + kEps && leave_k >= 0 &&
                std::make_pair(bc.i, bc.j) <
                    std::make_pair(basis[leave_k].i, basis[leave_k].j);
            if (leave_k < 0 || smaller || tie_lower) {
                theta = std::min(theta, bc.mass);
                leave_k = path_cells[idx];
            }
        }
        if (leave_k < 0) throw std::runtime_error("transport pivot found no leaving cell");

        for (std::size_t idx = 0; idx < path_cells.size(); ++idx) {
            BasisCell& bc = basis[path_cells[idx]];
            bc.mass += (idx % 2 == 0) ? -theta : theta;
            if (bc.mass < 0.0) bc.mass = 0.0;
        }
        basis[leave_k] = {ei, ej, theta};
        rebuild_index();
    }

    TransportResult result;
    for (const BasisCell& bc : basis) {
        if (bc.mass <= kEps) continue;
        if (!std::isfinite(cost[bc.i][bc.j])) {
            result.infinite = true;
            result.cost = kInf;
            return result;
        }
        result.cost += bc.mass * cost[bc.i][bc.j];
    }
    return result;
}

std::vector<double> dijkstra(const WeightedDigraph& graph, int source) {
    const int n = graph.node_count;
    std::vector<double> dist(n, kInf);
    const auto adj = graph.out_adjacency();
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[source] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        const auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        for (const auto& [w, len] : adj[v]) {
            const double nd = d + len;
            if (nd < dist[w]) {
                dist[w] = nd;
                pq.emplace(nd, w);
            }
        }
    }
    return dist;
}

std::vector<double> bfs_distances(const Graph& graph, NodeId source) {
    std::vector<double> dist(graph.node_count, kInf);
    const auto adj = graph.adjacency();
    std::queue<NodeId> q;
    dist[source] = 0.0;
    q.push(source);
    while (!q.empty()) {
        const NodeId v = q.front();
        q.pop();
        for (NodeId w : adj[v]) {
            if (dist[w] == kInf) {
                dist[w] = dist[v] + 1.0;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace relmp
