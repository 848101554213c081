#include "relmp/relational.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relmp {

void Relation::add_tuple(std::vector<EntityId> t) {
    if (static_cast<int>(t.size()) != arity) {
        throw std::invalid_argument("tuple arity mismatch in relation " + name);
    }
    tuples.push_back(std::move(t));
}

bool Relation::contains(const std::vector<EntityId>& t) const {
    return std::binary_search(tuples.begin(), tuples.end(), t);
}

void Relation::canonicalize() {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

const Relation* RelationalStructure::find_relation(const std::string& name) const {
    for (const Relation& r : relations) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

Relation* RelationalStructure::find_relation(const std::string& name) {
    for (Relation& r : relations) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

void RelationalStructure::validate() const {
    if (entity_count < 0) throw std::invalid_argument("negative entity count");
    std::set<std::string> names;
    for (const Relation& r : relations) {
        if (r.arity < 1) throw std::invalid_argument("relation arity must be >= 1");
        if (!names.insert(r.name).second) {
            throw std::invalid_argument("duplicate relation name " + r.name);
        }
        for (std::size_t i = 0; i < r.tuples.size(); ++i) {
            const auto& t = r.tuples[i];
            if (static_cast<int>(t.size()) != r.arity) {
                throw std::invalid_argument("tuple arity mismatch in " + r.name);
            }
            for (std::size_t slot = 0; slot < t.size(); ++slot) {
                const EntityId e = t[slot];
                if (e == kNullEntity) {
                    // Only the trailing witness slot of arity-3 tuples may be null.
                    if (r.arity != 3 || slot != 2) {
                        throw std::invalid_argument("null entity outside witness slot in " + r.name);
                    }
                    continue;
                }
                if (e < 0 || e >= entity_count) {
                    throw std::invalid_argument("tuple member not a declared entity in " + r.name);
                }
            }
            if (i > 0 && t == r.tuples[i - 1]) {
                throw std::invalid_argument("duplicate tuple in " + r.name);
            }
            if (i > 0 && t < r.tuples[i - 1]) {
                throw std::invalid_argument("tuples not canonicalized in " + r.name);
            }
        }
    }
    if (!entities.empty() && static_cast<int>(entities.size()) != entity_count) {
        throw std::invalid_argument("entity metadata not dense");
    }
    if (!features.empty()) {
        if (static_cast<int>(features.size()) != entity_count) {
            throw std::invalid_argument("feature rows != entity count");
        }
        const std::size_t dim = features[0].size();
        for (const auto& f : features) {
            if (f.size() != dim) throw std::invalid_argument("inconsistent feature dimensions");
        }
    }
}

const char* relation_kind_name(RelationKind kind) {
    switch (kind) {
        case RelationKind::identity: return "identity";
        case RelationKind::boundary: return "boundary";
        case RelationKind::coboundary: return "coboundary";
        case RelationKind::lower: return "lower";
        case RelationKind::upper: return "upper";
    }
    return "?";
}

RelationalStructure to_relational(const Complex& complex,
                                  const std::vector<RelationKind>& selection) {
    if (selection.empty()) throw std::invalid_argument("empty relation selection");

    RelationalStructure s;
    s.entity_count = static_cast<int>(complex.size());
    for (const Cell& c : complex.cells) {
        EntityMeta m;
        m.id = c.id;
        m.dim = c.dim;
        m.vertices = c.vertices;
        m.boundary = c.boundary;
        s.entities.push_back(std::move(m));
    }
    if (!complex.features.empty()) {
        s.features.resize(complex.size());
        for (const auto& [id, f] : complex.features) s.features[id] = f;
    }

    const auto cob = complex.coboundary_index();

    // Fixed R_1..R_5 ordering regardless of the order kinds were requested in.
    const RelationKind all[] = {RelationKind::identity, RelationKind::boundary,
                                RelationKind::coboundary, RelationKind::lower,
                                RelationKind::upper};
    for (RelationKind kind : all) {
        if (std::find(selection.begin(), selection.end(), kind) == selection.end()) {
            continue;
        }
        Relation r;
        r.name = relation_kind_name(kind);
        r.arity = (kind == RelationKind::identity)                                 ? 1
                  : (kind == RelationKind::boundary || kind == RelationKind::coboundary) ? 2
                                                                                   : 3;
        for (const Cell& c : complex.cells) {
            switch (kind) {
                case RelationKind::identity:
                    r.add_tuple({c.id});
                    break;
                case RelationKind::boundary:
                    for (CellId face : c.boundary) r.add_tuple({c.id, face});
                    break;
                case RelationKind::coboundary:
                    for (CellId coface : cob[c.id]) r.add_tuple({c.id, coface});
                    break;
                case RelationKind::lower:
                    for (const auto& [peer, witness] : lower_pairs(complex, c.id, cob)) {
                        r.add_tuple({c.id, peer, witness});
                    }
                    break;
                case RelationKind::upper:
                    for (const auto& [peer, witness] : upper_pairs(complex, c.id, cob)) {
                        r.add_tuple({c.id, peer, witness});
                    }
                    break;
            }
        }
        r.canonicalize();
        s.relations.push_back(std::move(r));
    }
    return s;
}

RelationalStructure with_identity(const RelationalStructure& structure) {
    if (structure.find_relation("identity")) return structure;
    RelationalStructure s = structure;
    Relation id;
    id.name = "identity";
    id.arity = 1;
    for (EntityId e = 0; e < s.entity_count; ++e) id.add_tuple({e});
    s.relations.push_back(std::move(id));
    return s;
}

}  // namespace relmp
