#pragma once

#include <string>
#include <vector>

#include "relmp/complex.hpp"

namespace relmp {

using EntityId = int;

/// Reserved null entity used in the witness slot of arity-3 tuples when the
/// witness cell is absent from the structure. Serializes as -1; message
/// functions substitute a zero feature vector for it.
inline constexpr EntityId kNullEntity = -1;

struct Relation {
    std::string name;
    int arity = 1;
    std::vector<std::vector<EntityId>> tuples;  // sorted lexicographically, unique

    void add_tuple(std::vector<EntityId> t);
    bool contains(const std::vector<EntityId>& t) const;
    void canonicalize();
};

/// Per-entity metadata preserved through lifting so structures round-trip to
/// the JSON schema (id, dim, vertices, boundary).
struct EntityMeta {
    EntityId id = 0;
    int dim = 0;
    std::vector<NodeId> vertices;
    std::vector<EntityId> boundary;
};

/// Finite entity set plus named relations of fixed arity. Entities are the
/// dense integers 0..entity_count-1.
struct RelationalStructure {
    int entity_count = 0;
    std::vector<Relation> relations;
    std::vector<EntityMeta> entities;            // optional; empty or dense
    std::vector<std::vector<double>> features;   // optional; empty or dense

    const Relation* find_relation(const std::string& name) const;
    Relation* find_relation(const std::string& name);

    void validate() const;
};

enum class RelationKind { identity, boundary, coboundary, lower, upper };

/// Names used for the five complex-derived relations, in R_1..R_5 order.
const char* relation_kind_name(RelationKind kind);

/// Encodes a complex as a relational structure. Entities are the cell ids;
/// identity is arity 1, boundary/coboundary arity 2, lower/upper arity 3 with
/// the shared covered/covering cell in the witness slot (one tuple per
/// witness). A missing witness is encoded as kNullEntity.
RelationalStructure to_relational(const Complex& complex,
                                  const std::vector<RelationKind>& selection);

/// Appends an arity-1 identity relation covering every entity (no-op if one
/// named "identity" already exists).
RelationalStructure with_identity(const RelationalStructure& structure);

}  // namespace relmp
