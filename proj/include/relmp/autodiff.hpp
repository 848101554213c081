#pragma once

#include <cstdint>
#include <vector>

#include "relmp/matrix.hpp"
#include "relmp/rng.hpp"

namespace relmp::ad {

/// Fixed sparse operator (row-wise adjacency list), used for neighborhood
/// aggregation. Rows and columns refer to stacked entity rows.
struct Sparse {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, double>>> row_entries;

    Matrix apply(const Matrix& x) const;
    Matrix apply_transposed(const Matrix& g) const;

    /// Block-diagonal replication for a batch of stacked graphs.
    Sparse replicate(int copies) const;
};

/// Learnable parameter store with Adam state. Parameters persist across
/// tapes; gradients are accumulated by Tape::backward.
class Params {
public:
    int add(Matrix init);
    std::size_t size() const { return values_.size(); }

    Matrix& value(int i) { return values_[i]; }
    const Matrix& value(int i) const { return values_[i]; }
    Matrix& grad(int i) { return grads_[i]; }

    void zero_grads();

    /// One Adam update; when clip > 0 entries are clamped to [-clip, clip]
    /// afterwards.
    void adam_step(double lr, double beta1, double beta2, double eps, double clip);

    double max_abs_entry() const;

private:
    std::vector<Matrix> values_, grads_, adam_m_, adam_v_;
    long step_ = 0;
};

/// Reverse-mode tape over matrix-valued nodes. Build the graph through the
/// factory methods, then call backward_* once; gradients land in Params.
class Tape {
public:
    explicit Tape(Params& params) : params_(&params) {}

    int input(Matrix v);
    int constant(Matrix v) { return input(std::move(v)); }

    /// x * W (+ broadcast row bias when bias_param >= 0).
    int linear(int x, int weight_param, int bias_param = -1);
    int agg(const Sparse& s, int x);
    int add(int a, int b);
    int relu(int x);
    int tanh_(int x);
    int concat_cols(const std::vector<int>& xs);
    /// (1 + eps) * x for a 1x1 parameter eps.
    int scale_one_plus(int x, int eps_param);
    int scale(int x, double factor);
    int select_rows(int x, std::vector<int> rows);

    const Matrix& value(int node) const { return nodes_[node].value; }

    /// Mean softmax cross-entropy of logit rows against labels; runs the
    /// backward sweep and returns the loss.
    double backward_softmax_cross_entropy(int logits, const std::vector<int>& labels);

    /// Seeds d(out)/d(out) = seed and back-propagates (for Jacobian probes).
    void backward(int node, const Matrix& seed);

private:
    enum class Op {
        input, linear, agg, add, relu, tanh_, concat, scale1p, scale, select
    };
    struct Node {
        Op op;
        std::vector<int> inputs;
        const Sparse* sparse = nullptr;
        int weight_param = -1;
        int bias_param = -1;
        double factor = 1.0;
        std::vector<int> rows;
        Matrix value;
        Matrix grad;
    };

    int push(Node n);
    void backward_sweep(int node);

    Params* params_;
    std::vector<Node> nodes_;
};

/// Uniform init in [-scale, scale].
Matrix uniform_init(std::size_t rows, std::size_t cols, double scale, Rng& rng);

}  // namespace relmp::ad
