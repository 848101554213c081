#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "relmp/graph.hpp"

namespace relmp {

/// Curvature of one edge plus the motif/transport components behind it.
/// For the Forman family, value = 4 - w_out - w_in + 3*w_t + 2*w_f exactly.
struct EdgeCurvatureReport {
    std::pair<int, int> edge;  // (src, dst)
    double value = 0.0;
    double w_out = 0.0;
    double w_in = 0.0;
    double w_t = 0.0;
    double w_f = 0.0;
    double wasserstein = 0.0;
    double edge_weight = 0.0;
    bool infinite = false;  // ORC with unreachable support pair
};

/// Extended Forman curvature of the directed edge tau -> sigma on a weighted
/// digraph: 4 - w_tau^out - w_sigma^in + 3 w_T + 2 w_F, with
/// w_T = sum_xi w(tau->xi) w(xi->sigma) and
/// w_F = sum_{xi1,xi2} w(tau->xi1) w(xi1->xi2) w(xi2->sigma).
EdgeCurvatureReport efc(const WeightedDigraph& graph, int tau, int sigma);

struct LocalGeometryCheck {
    double lhs = 0.0;  // (prod alpha beta) (B^2)_{sigma,tau} = (prod) * w_T
    double rhs = 0.0;  // (1/3)(prod)[EFC + w_out + w_in - 4]
    bool holds = false;
};

/// Checks the 2-layer local-geometry inequality on an influence graph built
/// from B, for the edge tau -> sigma.
LocalGeometryCheck prop_local_geometry_check(const WeightedDigraph& graph_from_b,
                                             int tau, int sigma,
                                             const std::vector<double>& alphas,
                                             const std::vector<double>& betas);

/// Directed Ollivier-Ricci curvature of the edge sigma -> tau:
/// k = 1 - W(mu_sigma^in, mu_tau^out) / w(sigma->tau), with exact optimal
/// transport under weighted shortest-path distances. Throws when either
/// measure has zero mass; flags infinite when supports cannot reach each
/// other.
EdgeCurvatureReport orc_directed(const WeightedDigraph& graph, int sigma, int tau);

/// Undirected unit-weight Ollivier-Ricci: uniform neighbor measures, no
/// idleness, k = 1 - W(mu_u, mu_v).
double orc_undirected(const Graph& graph, NodeId u, NodeId v);

/// Balanced Forman curvature (simple undirected graphs). Zero when either
/// endpoint is a leaf.
double bfc(const Graph& graph, NodeId u, NodeId v);

enum class AfcVariant { afc3, afc4 };

/// Augmented Forman curvature: afc3 = 4 - d_u - d_v + 3|triangles|;
/// afc4 additionally counts quadrangles through the edge with weight 2.
double afc(const Graph& graph, NodeId u, NodeId v, AfcVariant variant);

struct WeightedCurvatureSummary {
    double wc = 0.0;   // sum_e bc(e) curv(e)
    double nwc = 0.0;  // restricted to curv(e) < 0
};

/// Betweenness-weighted curvature summaries. Betweenness uses unit edge
/// lengths unless weighted_lengths is set.
WeightedCurvatureSummary weighted_curvature(
    const Graph& graph,
    const std::function<double(NodeId, NodeId)>& curvature_fn,
    bool weighted_lengths = false,
    const std::map<std::pair<NodeId, NodeId>, double>& lengths = {});

enum class GraphCurvatureKind { orc, bfc, afc3, afc4 };

/// Per-edge samples over an undirected graph, ordered by edge; edges are
/// independent and evaluated in parallel.
std::vector<std::pair<std::pair<NodeId, NodeId>, double>> curvature_distribution(
    const Graph& graph, GraphCurvatureKind kind);

enum class DigraphCurvatureKind { efc, orc_directed };

std::vector<std::pair<std::pair<int, int>, double>> curvature_distribution(
    const WeightedDigraph& graph, DigraphCurvatureKind kind);

/// Max weighted 3-step path cost w(xi->sigma) + w(sigma->tau) + w(tau->eta)
/// over support pairs (xi incoming neighbor of sigma, eta outgoing neighbor
/// of tau); the transport-cost constant of the 2-layer ORC remark.
double w_max3(const WeightedDigraph& graph, int sigma, int tau);

}  // namespace relmp
