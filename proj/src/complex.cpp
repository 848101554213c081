#include "relmp/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace relmp {

const Cell& Complex::cell(CellId id) const {
    if (id < 0 || id >= static_cast<CellId>(cells.size())) {
        throw std::out_of_range("unknown cell id " + std::to_string(id));
    }
    return cells[id];
}

CellId Complex::find_by_vertices(const std::vector<NodeId>& verts) const {
    for (const Cell& c : cells) {
        if (c.vertices == verts) return c.id;
    }
    return -1;
}

std::vector<std::vector<CellId>> Complex::coboundary_index() const {
    std::vector<std::vector<CellId>> cob(cells.size());
    for (const Cell& c : cells) {
        for (CellId face : c.boundary) cob[face].push_back(c.id);
    }
    return cob;
}

void Complex::validate() const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        if (c.id != static_cast<CellId>(i)) throw std::invalid_argument("cell ids not dense");
        if (c.dim < 0 || c.dim > max_dim) throw std::invalid_argument("cell dimension out of range");
        if (c.dim == 0 && (c.vertices.size() != 1 || !c.boundary.empty())) {
            throw std::invalid_argument("0-cells must have one vertex, empty boundary");
        }
        if (!std::is_sorted(c.vertices.begin(), c.vertices.end())) {
            throw std::invalid_argument("cell vertices not sorted");
        }
        for (CellId b : c.boundary) {
            if (b < 0 || b >= static_cast<CellId>(cells.size())) {
                throw std::invalid_argument("boundary reference out of range");
            }
            if (cells[b].dim != c.dim - 1) {
                throw std::invalid_argument("boundary must be one dimension lower");
            }
        }
    }
    if (!features.empty()) {
        const std::size_t dim = features.begin()->second.size();
        for (const auto& [id, f] : features) {
            if (f.size() != dim) throw std::invalid_argument("inconsistent cell feature dimensions");
        }
    }
}

Complex complex_from_simplices(const std::vector<std::vector<NodeId>>& simplices) {
    std::set<std::vector<NodeId>> closure;
    for (auto verts : simplices) {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.empty()) throw std::invalid_argument("empty simplex");
        // Close under non-empty subsets via subset enumeration.
        const std::size_t n = verts.size();
        for (std::size_t mask = 1; mask < (1ULL << n); ++mask) {
            std::vector<NodeId> face;
            for (std::size_t b = 0; b < n; ++b) {
                if (mask & (1ULL << b)) face.push_back(verts[b]);
            }
            closure.insert(face);
        }
    }

    std::vector<std::vector<NodeId>> ordered(closure.begin(), closure.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::map<std::vector<NodeId>, CellId> id_of;
    Complex k;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        Cell c;
        c.id = static_cast<CellId>(i);
        c.vertices = ordered[i];
        c.dim = static_cast<int>(ordered[i].size()) - 1;
        k.max_dim = std::max(k.max_dim, c.dim);
        id_of[c.vertices] = c.id;
        k.cells.push_back(std::move(c));
    }
    for (Cell& c : k.cells) {
        if (c.dim == 0) continue;
        for (std::size_t skip = 0; skip < c.vertices.size(); ++skip) {
            std::vector<NodeId> face;
            for (std::size_t j = 0; j < c.vertices.size(); ++j) {
                if (j != skip) face.push_back(c.vertices[j]);
            }
            c.boundary.push_back(id_of.at(face));
        }
        std::sort(c.boundary.begin(), c.boundary.end());
    }
    return k;
}

std::vector<std::pair<CellId, CellId>> lower_pairs(
    const Complex& complex, CellId cell,
    const std::vector<std::vector<CellId>>& cob) {
    const Cell& c = complex.cell(cell);
    std::set<std::pair<CellId, CellId>> out;
    for (CellId face : c.boundary) {
        for (CellId peer : cob[face]) {
            if (peer != cell) out.emplace(peer, face);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::pair<CellId, CellId>> upper_pairs(
    const Complex& complex, CellId cell,
    const std::vector<std::vector<CellId>>& cob) {
    std::set<std::pair<CellId, CellId>> out;
    for (CellId coface : cob[cell]) {
        for (CellId peer : complex.cell(coface).boundary) {
            if (peer != cell) out.emplace(peer, coface);
        }
    }
    return {out.begin(), out.end()};
}

Adjacency adjacencies(const Complex& complex, CellId cell) {
    const Cell& c = complex.cell(cell);
    const auto cob = complex.coboundary_index();

    Adjacency adj;
    adj.boundary = c.boundary;
    adj.coboundary = cob[cell];

    for (const auto& [peer, witness] : lower_pairs(complex, cell, cob)) {
        if (adj.lower_witness.emplace(peer, witness).second) {
            adj.lower.push_back(peer);
        }
    }
    for (const auto& [peer, witness] : upper_pairs(complex, cell, cob)) {
        if (adj.upper_witness.emplace(peer, witness).second) {
            adj.upper.push_back(peer);
        }
    }
    return adj;
}

}  // namespace relmp
