#include "relmp/influence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relmp {

void InfluenceMatrices::validate() const {
    const std::size_t n = aggregated.rows();
    if (aggregated.cols() != n || augmented.rows() != n || augmented.cols() != n) {
        throw std::invalid_argument("influence matrices must be square and consistent");
    }
    Matrix sum(n, n);
    for (const Matrix& m : per_relation) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) sum(i, j) += m(i, j);
        }
    }
    if (!(sum == aggregated)) {
        throw std::invalid_argument("aggregated matrix != sum of per-relation matrices");
    }
    const auto sums = kernels::row_sums(aggregated);
    double max_sum = 0.0;
    for (double s : sums) max_sum = std::max(max_sum, s);
    if (max_sum != gamma) throw std::invalid_argument("gamma != max row sum");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double expected = aggregated(i, j) + (i == j ? gamma : 0.0);
            if (augmented(i, j) != expected) {
                throw std::invalid_argument("augmented != gamma*I + aggregated");
            }
        }
    }
}

InfluenceMatrices aggregate_influence(const std::vector<ShiftOperator>& shifts,
                                      int entity_count) {
    const std::size_t n = static_cast<std::size_t>(entity_count);
    InfluenceMatrices out;
    for (const ShiftOperator& op : shifts) {
        op.validate();
        Matrix m(n, n);
        if (op.arity == 1) {
            // The positional sum is vacuous at arity 1; the worked example
            // fixes A~^{R_identity} = diag of the tuple weights.
            for (std::size_t i = 0; i < op.tuples.size(); ++i) {
                const EntityId e = op.tuples[i][0];
                m(e, e) += op.weights[i];
            }
        } else {
            for (std::size_t i = 0; i < op.tuples.size(); ++i) {
                const auto& t = op.tuples[i];
                const EntityId head = t[0];
                for (int slot = 1; slot < op.arity; ++slot) {
                    if (t[slot] == kNullEntity) continue;
                    m(head, t[slot]) += op.weights[i];
                }
            }
        }
        out.relation_names.push_back(op.relation_name);
        out.per_relation.push_back(std::move(m));
    }

    out.aggregated = Matrix(n, n);
    for (const Matrix& m : out.per_relation) {
        for (std::size_t i = 0; i < n * n; ++i) {
            out.aggregated.data()[i] += m.data()[i];
        }
    }
    const auto sums = kernels::row_sums(out.aggregated);
    out.gamma = 0.0;
    for (double s : sums) out.gamma = std::max(out.gamma, s);
    out.augmented = out.aggregated;
    for (std::size_t i = 0; i < n; ++i) out.augmented(i, i) += out.gamma;
    return out;
}

WeightedDigraph influence_graph_from(const Matrix& q) {
    if (q.rows() != q.cols()) throw std::invalid_argument("influence matrix must be square");
    WeightedDigraph g;
    g.node_count = static_cast<int>(q.rows());
    for (std::size_t sigma = 0; sigma < q.rows(); ++sigma) {
        for (std::size_t tau = 0; tau < q.cols(); ++tau) {
            const double w = q(sigma, tau);
            if (w > 0.0) {
                g.add_edge(static_cast<int>(tau), static_cast<int>(sigma), w);
            }
            if (w < 0.0) throw std::invalid_argument("negative influence entry");
        }
    }
    return g;
}

WeightedDigraph influence_graph(const InfluenceMatrices& matrices,
                                InfluenceSource which) {
    return influence_graph_from(which == InfluenceSource::aggregated
                                    ? matrices.aggregated
                                    : matrices.augmented);
}

Matrix collapsed_adjacency(const RelationalStructure& structure) {
    structure.validate();
    const std::size_t n = static_cast<std::size_t>(structure.entity_count);
    Matrix a(n, n);
    for (const Relation& r : structure.relations) {
        for (const auto& t : r.tuples) {
            for (int slot = 1; slot < r.arity; ++slot) {
                if (t[slot] == kNullEntity) continue;
                a(t[0], t[slot]) += 1.0;
            }
        }
    }
    return a;
}

double matrix_power_entry(const Matrix& b, int t, int sigma, int tau) {
    if (t < 0) throw std::invalid_argument("negative matrix power");
    const Matrix p = kernels::matpow(b, static_cast<unsigned long long>(t));
    return p(sigma, tau);
}

std::uint64_t walk_count(const WeightedDigraph& graph, int len, int sigma, int tau) {
    if (len < 0) throw std::invalid_argument("negative walk length");
    const int n = graph.node_count;
    const auto out_adj = graph.out_adjacency();

    // counts[v] = number of walks tau -> v of the current length, saturating
    // at uint64 max.
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    auto sat_add = [](std::uint64_t a, std::uint64_t b) {
        return a > kMax - b ? kMax : a + b;
    };
    std::vector<std::uint64_t> counts(n, 0), next(n, 0);
    counts[tau] = 1;
    std::uint64_t total = (sigma == tau) ? 1 : 0;  // length-0 walk
    for (int step = 1; step <= len; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int v = 0; v < n; ++v) {
            if (counts[v] == 0) continue;
            for (const auto& [w, _] : out_adj[v]) {
                next[w] = sat_add(next[w], counts[v]);
            }
        }
        counts.swap(next);
        total = sat_add(total, counts[sigma]);
    }
    return total;
}

double sensitivity_bound(const InfluenceMatrices& matrices, int t, int sigma,
                         int tau, const std::vector<double>& alphas,
                         const std::vector<double>& betas) {
    if (static_cast<int>(alphas.size()) != t || static_cast<int>(betas.size()) != t) {
        throw std::invalid_argument("alpha/beta lists must have length t");
    }
    double prod = 1.0;
    for (int l = 0; l < t; ++l) prod *= alphas[l] * betas[l];
    return prod * matrix_power_entry(matrices.augmented, t, sigma, tau);
}

double depth_bound(const InfluenceMatrices& matrices, int r, int m, int sigma,
                   int tau, double alpha_max, double beta_max, int relation_count) {
    if (m < 0 || m >= r) throw std::invalid_argument("depth bound requires 0 <= m < r");
    const double big_m = kernels::max_entry(matrices.aggregated);
    const double c = std::pow(alpha_max * beta_max, m) *
                     std::pow(2.0 * relation_count * (1.0 + m), m);
    const WeightedDigraph g = influence_graph_from(matrices.aggregated);
    const double omega = static_cast<double>(walk_count(g, r + m, sigma, tau));
    return c * omega * std::pow(2.0 * alpha_max * beta_max * big_m, r);
}

double hidden_dim_bound(const InfluenceMatrices& matrices, int t, int sigma,
                        int tau, const std::vector<int>& widths,
                        const std::vector<int>& message_widths, double c_w,
                        double c_f, double c_g) {
    if (static_cast<int>(widths.size()) != t + 1) {
        throw std::invalid_argument("widths must list p_0..p_t");
    }
    if (static_cast<int>(message_widths.size()) != t) {
        throw std::invalid_argument("message widths must list p'_0..p'_{t-1}");
    }
    std::vector<double> alphas(t), betas(t);
    for (int l = 0; l < t; ++l) {
        if (widths[l + 1] <= 0 || message_widths[l] <= 0) {
            throw std::invalid_argument("widths must be positive");
        }
        alphas[l] = c_w * c_f * c_g * widths[l + 1];
        betas[l] = c_w * message_widths[l];
    }
    return sensitivity_bound(matrices, t, sigma, tau, alphas, betas);
}

}  // namespace relmp
