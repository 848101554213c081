#pragma once

#include <string>
#include <vector>

#include "relmp/relational.hpp"

namespace relmp {

/// Sparse nonnegative tensor over one relation: only on-relation tuples are
/// keyed, so off-relation entries are structurally zero.
struct ShiftOperator {
    std::string relation_name;
    int arity = 1;
    // Parallel to tuples: same order as the relation's canonical tuple list.
    std::vector<std::vector<EntityId>> tuples;
    std::vector<double> weights;

    void validate() const;
};

/// One 0/1 operator per relation, weight 1.0 on every tuple.
std::vector<ShiftOperator> indicator_shifts(const RelationalStructure& structure);

/// Rescales so every nonzero head row sums to exactly 1 (zero rows stay zero).
ShiftOperator normalize_rows(const ShiftOperator& shift);

std::vector<ShiftOperator> normalize_rows(const std::vector<ShiftOperator>& shifts);

/// Multiplies every weight by the given factor (model-side scaling helper).
ShiftOperator scale_weights(const ShiftOperator& shift, double factor);

}  // namespace relmp
