#pragma once

#include <cstdint>
#include <vector>

#include "relmp/graph.hpp"
#include "relmp/matrix.hpp"
#include "relmp/shift.hpp"

namespace relmp {

/// Per-relation influence matrices, their aggregate, and the augmented form
/// B = gamma*I + A~ with gamma the maximum row sum of A~.
struct InfluenceMatrices {
    std::vector<std::string> relation_names;
    std::vector<Matrix> per_relation;
    Matrix aggregated;  // A~
    double gamma = 0.0;
    Matrix augmented;   // B

    void validate() const;
};

/// A~^{R_i}_{sigma,tau} sums the shift weight over every tail position tau
/// can occupy. Arity-1 relations contribute their tuple weights on the
/// diagonal (the worked-example convention for identity relations).
InfluenceMatrices aggregate_influence(const std::vector<ShiftOperator>& shifts,
                                      int entity_count);

enum class InfluenceSource { aggregated, augmented };

/// Directed edge tau -> sigma with weight Q_{sigma,tau} for every positive
/// entry of the chosen matrix.
WeightedDigraph influence_graph(const InfluenceMatrices& matrices,
                                InfluenceSource which);

/// Generic form: edges from any nonnegative matrix Q.
WeightedDigraph influence_graph_from(const Matrix& q);

/// A^col_{sigma,tau} counts (relation, tuple, tail position) triples with
/// head sigma and tau in that tail slot. Arity-1 tuples have no tail slots.
Matrix collapsed_adjacency(const RelationalStructure& structure);

/// (B^t)_{sigma,tau} by repeated squaring.
double matrix_power_entry(const Matrix& b, int t, int sigma, int tau);

/// Number of directed walks from tau to sigma of length <= len in the
/// unweighted support of the graph. The length-0 walk from a node to itself
/// counts, so walk_count(g, len, s, s) >= 1.
std::uint64_t walk_count(const WeightedDigraph& graph, int len, int sigma, int tau);

/// (prod_l alpha_l beta_l) * (B^t)_{sigma,tau}  -- the layer-t sensitivity
/// upper bound.
double sensitivity_bound(const InfluenceMatrices& matrices, int t, int sigma,
                         int tau, const std::vector<double>& alphas,
                         const std::vector<double>& betas);

/// Depth bound C * omega_{r+m}(sigma,tau) * (2 alpha beta M)^r with
/// C = (alpha_max beta_max)^m (2 k (1+m))^m, M the maximum entry of A~, and
/// omega counted on the influence graph of A~.
double depth_bound(const InfluenceMatrices& matrices, int r, int m, int sigma,
                   int tau, double alpha_max, double beta_max, int relation_count);

/// Sensitivity bound instantiated with the shallow-MLP Lipschitz constants
/// alpha_l = C_w C_f C_g p_{l+1} and beta_l = C_w p'_l.
double hidden_dim_bound(const InfluenceMatrices& matrices, int t, int sigma,
                        int tau, const std::vector<int>& widths,
                        const std::vector<int>& message_widths, double c_w,
                        double c_f, double c_g);

}  // namespace relmp
