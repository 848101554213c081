#pragma once

#include <map>
#include <vector>

#include "relmp/graph.hpp"

namespace relmp {

using CellId = int;

/// One cell of a complex. dim-0 cells are vertices; simplex cells carry
/// dim+1 vertices and cover all their (dim-1)-faces; ring 2-cells carry an
/// explicit boundary list of >= 3 edge cells forming a single cycle.
struct Cell {
    CellId id = -1;
    int dim = 0;
    std::vector<NodeId> vertices;  // sorted
    std::vector<CellId> boundary;  // sorted, cells of dimension dim-1
};

struct Complex {
    std::vector<Cell> cells;  // indexed by id, ordered (dim asc, lex vertices)
    int max_dim = 0;
    std::map<CellId, std::vector<double>> features;

    const Cell& cell(CellId id) const;
    std::size_t size() const { return cells.size(); }

    /// id lookup by exact vertex set among simplex-style cells; -1 if absent.
    CellId find_by_vertices(const std::vector<NodeId>& verts) const;

    /// Cofaces per cell (inverse of the boundary lists).
    std::vector<std::vector<CellId>> coboundary_index() const;

    void validate() const;
};

/// Builds a complex from bare simplices (vertex sets). Ids are assigned
/// densely by (dimension ascending, lexicographic vertex order) and boundary
/// lists are wired to all codimension-1 faces, which must all be present.
Complex complex_from_simplices(const std::vector<std::vector<NodeId>>& simplices);

/// The four adjacency sets of one cell, with the covering/covered witness per
/// lower/upper neighbor. When a pair shares several witnesses (possible for
/// ring cells), the maps hold the lowest witness id; to_relational emits one
/// tuple per witness.
struct Adjacency {
    std::vector<CellId> boundary;
    std::vector<CellId> coboundary;
    std::vector<CellId> lower;
    std::vector<CellId> upper;
    std::map<CellId, CellId> lower_witness;
    std::map<CellId, CellId> upper_witness;
};

Adjacency adjacencies(const Complex& complex, CellId cell);

/// All (neighbor, witness) pairs of lower/upper adjacency for one cell, one
/// entry per shared covered/covering face, ordered (neighbor, witness).
std::vector<std::pair<CellId, CellId>> lower_pairs(
    const Complex& complex, CellId cell,
    const std::vector<std::vector<CellId>>& coboundary_index);
std::vector<std::pair<CellId, CellId>> upper_pairs(
    const Complex& complex, CellId cell,
    const std::vector<std::vector<CellId>>& coboundary_index);

}  // namespace relmp
