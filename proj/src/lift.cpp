#include "relmp/lift.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relmp {

namespace {

std::vector<std::vector<double>> node_features_or_default(const Graph& graph) {
    if (!graph.features.empty()) return graph.features;
    // Feature-less graphs get the constant scalar 1.0 so lifts stay
    // feature-complete.
    return std::vector<std::vector<double>>(graph.node_count, {1.0});
}

std::vector<double> mean_feature(const std::vector<std::vector<double>>& feats,
                                 const std::vector<NodeId>& members) {
    std::vector<double> out(feats.empty() ? 0 : feats[0].size(), 0.0);
    for (NodeId v : members) {
        for (std::size_t d = 0; d < out.size(); ++d) out[d] += feats[v][d];
    }
    const double inv = 1.0 / static_cast<double>(members.size());
    for (double& x : out) x *= inv;
    return out;
}

void attach_structure_features(LiftResult& result) {
    result.structure.features.resize(result.complex.size());
    for (const auto& [id, f] : result.complex.features) {
        result.structure.features[id] = f;
    }
}

}  // namespace

void LiftConfig::validate() const {
    if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
    if (max_ring < 3) throw std::invalid_argument("max_ring must be >= 3");
    if (order_n < 2) throw std::invalid_argument("order_n must be >= 2");
    if (relation_selection.empty()) throw std::invalid_argument("empty relation selection");
}

std::vector<std::vector<NodeId>> enumerate_cliques(const Graph& graph, int max_size) {
    graph.validate();
    const auto adj = graph.adjacency();
    std::vector<std::vector<NodeId>> cliques;
    std::vector<NodeId> current;

    // Expansion over candidates larger than the last member keeps every
    // clique enumerated exactly once, already in lexicographic order.
    auto expand = [&](auto&& self, const std::vector<NodeId>& cands) -> void {
        cliques.push_back(current);
        if (static_cast<int>(current.size()) == max_size) return;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const NodeId u = cands[i];
            std::vector<NodeId> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (graph.has_edge(u, cands[j])) next.push_back(cands[j]);
            }
            current.push_back(u);
            self(self, next);
            current.pop_back();
        }
    };

    for (NodeId v = 0; v < graph.node_count; ++v) {
        current = {v};
        std::vector<NodeId> cands;
        for (NodeId u : adj[v]) {
            if (u > v) cands.push_back(u);
        }
        expand(expand, cands);
    }
    std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return cliques;
}

std::vector<std::vector<NodeId>> enumerate_chordless_cycles(const Graph& graph, int max_len) {
    graph.validate();
    if (max_len < 3) throw std::invalid_argument("max_len must be >= 3");
    const auto adj = graph.adjacency();
    std::vector<std::vector<NodeId>> cycles;
    std::vector<NodeId> path;
    std::vector<char> in_path(graph.node_count, 0);

    // Grows induced paths s, p1, ..., pm with pi > s. A vertex adjacent to s
    // closes a cycle (and may not extend further, since the closing edge
    // would otherwise be a chord). p1 < closing vertex breaks the reflection
    // symmetry so each cycle is reported once.
    auto grow = [&](auto&& self) -> void {
        const NodeId s = path.front();
        const NodeId tip = path.back();
        for (NodeId w : adj[tip]) {
            if (w <= s || in_path[w]) continue;
            bool chord = false;
            bool closes = false;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (graph.has_edge(w, path[i])) {
                    if (i == 0) {
                        closes = true;
                    } else {
                        chord = true;
                        break;
                    }
                }
            }
            if (chord) continue;
            if (closes) {
                if (path.size() >= 2 && path[1] < w) {
                    std::vector<NodeId> cycle = path;
                    cycle.push_back(w);
                    cycles.push_back(std::move(cycle));
                }
                continue;
            }
            if (static_cast<int>(path.size()) + 1 < max_len) {
                path.push_back(w);
                in_path[w] = 1;
                self(self);
                in_path[w] = 0;
                path.pop_back();
            }
        }
    };

    for (NodeId s = 0; s < graph.node_count; ++s) {
        for (NodeId p1 : adj[s]) {
            if (p1 <= s) continue;
            path = {s, p1};
            in_path[s] = in_path[p1] = 1;
            grow(grow);
            in_path[s] = in_path[p1] = 0;
        }
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

LiftResult lift_none(const Graph& graph) {
    graph.validate();
    LiftResult out;
    out.structure.entity_count = graph.node_count;
    const auto feats = node_features_or_default(graph);
    out.structure.features = feats;
    for (NodeId v = 0; v < graph.node_count; ++v) {
        EntityMeta m;
        m.id = v;
        m.dim = 0;
        m.vertices = {v};
        out.structure.entities.push_back(std::move(m));
    }
    Relation upper;
    upper.name = "upper";
    upper.arity = 2;
    for (const auto& [u, v] : graph.edges) {
        upper.add_tuple({u, v});
        upper.add_tuple({v, u});
    }
    upper.canonicalize();
    out.structure.relations.push_back(std::move(upper));
    return out;
}

LiftResult lift_clique(const Graph& graph, int max_dim,
                       const std::vector<RelationKind>& selection) {
    graph.validate();
    const auto cliques = enumerate_cliques(graph, max_dim + 1);
    const auto feats = node_features_or_default(graph);

    LiftResult out;
    std::map<std::vector<NodeId>, CellId> id_of;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        Cell c;
        c.id = static_cast<CellId>(i);
        c.vertices = cliques[i];
        c.dim = static_cast<int>(cliques[i].size()) - 1;
        out.complex.max_dim = std::max(out.complex.max_dim, c.dim);
        id_of[c.vertices] = c.id;
        out.complex.features[c.id] = mean_feature(feats, c.vertices);
        out.complex.cells.push_back(std::move(c));
    }
    for (Cell& c : out.complex.cells) {
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
    out.structure = to_relational(out.complex, selection);
    attach_structure_features(out);
    return out;
}

LiftResult lift_ring(const Graph& graph, int max_ring,
                     const std::vector<RelationKind>& selection) {
    graph.validate();
    if (max_ring < 3) throw std::invalid_argument("max_ring must be >= 3");
    const auto feats = node_features_or_default(graph);

    LiftResult out;
    std::map<std::vector<NodeId>, CellId> id_of;
    CellId next_id = 0;
    for (NodeId v = 0; v < graph.node_count; ++v) {
        Cell c;
        c.id = next_id++;
        c.dim = 0;
        c.vertices = {v};
        id_of[c.vertices] = c.id;
        out.complex.features[c.id] = feats[v];
        out.complex.cells.push_back(std::move(c));
    }
    for (const auto& [u, v] : graph.edges) {
        Cell c;
        c.id = next_id++;
        c.dim = 1;
        c.vertices = {u, v};
        c.boundary = {id_of.at({u}), id_of.at({v})};
        std::sort(c.boundary.begin(), c.boundary.end());
        id_of[c.vertices] = c.id;
        out.complex.features[c.id] = mean_feature(feats, c.vertices);
        out.complex.cells.push_back(std::move(c));
    }
    out.complex.max_dim = out.complex.cells.empty() ? 0 : 1;

    // Ring 2-cells ordered by sorted vertex set; a chordless cycle is the
    // unique induced cycle on its vertex set, so this is unambiguous.
    auto cycles = enumerate_chordless_cycles(graph, max_ring);
    std::vector<std::pair<std::vector<NodeId>, std::vector<NodeId>>> ordered;
    for (auto& cyc : cycles) {
        std::vector<NodeId> sorted_verts = cyc;
        std::sort(sorted_verts.begin(), sorted_verts.end());
        ordered.emplace_back(std::move(sorted_verts), std::move(cyc));
    }
    std::sort(ordered.begin(), ordered.end());
    for (auto& [sorted_verts, cyc] : ordered) {
        Cell c;
        c.id = next_id++;
        c.dim = 2;
        c.vertices = sorted_verts;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            NodeId a = cyc[i];
            NodeId b = cyc[(i + 1) % cyc.size()];
            if (a > b) std::swap(a, b);
            c.boundary.push_back(id_of.at({a, b}));
        }
        std::sort(c.boundary.begin(), c.boundary.end());
        out.complex.features[c.id] = mean_feature(feats, c.vertices);
        out.complex.max_dim = 2;
        out.complex.cells.push_back(std::move(c));
    }
    out.structure = to_relational(out.complex, selection);
    attach_structure_features(out);
    return out;
}

LiftResult lift_higher_order(const Graph& graph, int order_n) {
    graph.validate();
    if (order_n < 2) throw std::invalid_argument("order_n must be >= 2");
    if (order_n > graph.node_count) {
        throw std::invalid_argument("order_n exceeds node count: empty structure");
    }
    const auto feats = node_features_or_default(graph);

    // All subsets of size order_n in lexicographic order.
    std::vector<std::vector<NodeId>> subsets;
    std::vector<NodeId> pick;
    auto choose = [&](auto&& self, NodeId start) -> void {
        if (static_cast<int>(pick.size()) == order_n) {
            subsets.push_back(pick);
            return;
        }
        for (NodeId v = start; v < graph.node_count; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);

    LiftResult out;
    out.structure.entity_count = static_cast<int>(subsets.size());
    std::map<std::vector<NodeId>, EntityId> id_of;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        EntityMeta m;
        m.id = static_cast<EntityId>(i);
        m.dim = order_n - 1;
        m.vertices = subsets[i];
        id_of[subsets[i]] = m.id;
        out.structure.entities.push_back(std::move(m));
        out.structure.features.push_back(mean_feature(feats, subsets[i]));
    }

    Relation local, global;
    local.name = "local";
    local.arity = 2;
    global.name = "global";
    global.arity = 2;
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            std::vector<NodeId> inter;
            std::set_intersection(subsets[a].begin(), subsets[a].end(),
                                  subsets[b].begin(), subsets[b].end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) != order_n - 1) continue;
            NodeId sa = -1, tb = -1;
            for (NodeId v : subsets[a]) {
                if (!std::binary_search(inter.begin(), inter.end(), v)) sa = v;
            }
            for (NodeId v : subsets[b]) {
                if (!std::binary_search(inter.begin(), inter.end(), v)) tb = v;
            }
            Relation& target = graph.has_edge(sa, tb) ? local : global;
            target.add_tuple({static_cast<EntityId>(a), static_cast<EntityId>(b)});
            target.add_tuple({static_cast<EntityId>(b), static_cast<EntityId>(a)});
        }
    }
    local.canonicalize();
    global.canonicalize();
    out.structure.relations.push_back(std::move(local));
    out.structure.relations.push_back(std::move(global));
    return out;
}

LiftResult lift(const Graph& graph, const LiftConfig& config) {
    config.validate();
    switch (config.method) {
        case LiftMethod::none: return lift_none(graph);
        case LiftMethod::clique:
            return lift_clique(graph, config.max_dim, config.relation_selection);
        case LiftMethod::ring:
            return lift_ring(graph, config.max_ring, config.relation_selection);
        case LiftMethod::higher_order:
            return lift_higher_order(graph, config.order_n);
    }
    throw std::invalid_argument("unknown lift method");
}

LiftStats lift_stats(const RelationalStructure& structure) {
    structure.validate();
    LiftStats stats;
    stats.entity_count = structure.entity_count;
    for (const EntityMeta& m : structure.entities) {
        ++stats.cells_by_dim[m.dim];
    }
    std::set<std::pair<EntityId, EntityId>> undirected;
    for (const Relation& r : structure.relations) {
        stats.relation_tuple_counts.emplace_back(r.name, r.tuples.size());
        if (r.name != "identity") stats.adjacency_tuples += r.tuples.size();
        for (const auto& t : r.tuples) {
            for (int slot = 1; slot < r.arity; ++slot) {
                if (t[slot] == kNullEntity || t[slot] == t[0]) continue;
                EntityId a = t[0], b = t[slot];
                if (a > b) std::swap(a, b);
                undirected.emplace(a, b);
            }
        }
    }
    stats.collapsed_undirected_edges = undirected.size();
    return stats;
}

}  // namespace relmp
