#pragma once

#include <map>
#include <string>
#include <vector>

#include "relmp/relational.hpp"

namespace relmp {

enum class LiftMethod { none, clique, ring, higher_order };

struct LiftConfig {
    LiftMethod method = LiftMethod::none;
    int max_dim = 2;    // clique lift
    int max_ring = 7;   // ring lift, >= 3
    int order_n = 2;    // higher-order lift, >= 2
    std::vector<RelationKind> relation_selection = {
        RelationKind::identity, RelationKind::boundary, RelationKind::coboundary,
        RelationKind::lower, RelationKind::upper};

    void validate() const;
};

struct LiftResult {
    Complex complex;  // empty (size 0) for none / higher-order lifts
    RelationalStructure structure;
};

/// One entity per node, single binary "upper" relation holding both
/// orientations of every edge.
LiftResult lift_none(const Graph& graph);

/// All cliques of size <= max_dim+1 become cells; features are vertex means.
LiftResult lift_clique(const Graph& graph, int max_dim,
                       const std::vector<RelationKind>& selection);

/// Nodes, edges, plus one 2-cell per chordless cycle of length 3..max_ring.
LiftResult lift_ring(const Graph& graph, int max_ring,
                     const std::vector<RelationKind>& selection);

/// Entities are the node subsets of size order_n; binary relations R_local
/// (differing nodes adjacent) and R_global (differing nodes non-adjacent).
LiftResult lift_higher_order(const Graph& graph, int order_n);

LiftResult lift(const Graph& graph, const LiftConfig& config);

/// All cliques of the graph with 1 <= size <= max_size, each sorted, the
/// list ordered by (size, lexicographic).
std::vector<std::vector<NodeId>> enumerate_cliques(const Graph& graph, int max_size);

/// All chordless (induced) cycles with 3 <= length <= max_len, each rotated
/// so the smallest vertex leads, ordered lexicographically.
std::vector<std::vector<NodeId>> enumerate_chordless_cycles(const Graph& graph, int max_len);

struct LiftStats {
    int entity_count = 0;
    std::vector<std::pair<std::string, std::size_t>> relation_tuple_counts;
    std::map<int, std::size_t> cells_by_dim;
    std::size_t adjacency_tuples = 0;       // all tuples excluding identity
    std::size_t collapsed_undirected_edges = 0;
};

LiftStats lift_stats(const RelationalStructure& structure);

}  // namespace relmp
