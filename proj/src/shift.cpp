#include "relmp/shift.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace relmp {

void ShiftOperator::validate() const {
    if (tuples.size() != weights.size()) {
        throw std::invalid_argument("shift tuples/weights size mismatch");
    }
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != arity) {
            throw std::invalid_argument("shift tuple arity mismatch");
        }
    }
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("negative shift weight");
    }
}

std::vector<ShiftOperator> indicator_shifts(const RelationalStructure& structure) {
    structure.validate();
    std::vector<ShiftOperator> shifts;
    for (const Relation& r : structure.relations) {
        ShiftOperator op;
        op.relation_name = r.name;
        op.arity = r.arity;
        op.tuples = r.tuples;
        op.weights.assign(r.tuples.size(), 1.0);
        shifts.push_back(std::move(op));
    }
    return shifts;
}

ShiftOperator normalize_rows(const ShiftOperator& shift) {
    shift.validate();
    std::map<EntityId, double> row_sum;
    for (std::size_t i = 0; i < shift.tuples.size(); ++i) {
        row_sum[shift.tuples[i][0]] += shift.weights[i];
    }
    ShiftOperator out = shift;
    for (std::size_t i = 0; i < out.tuples.size(); ++i) {
        const double s = row_sum[out.tuples[i][0]];
        if (s > 0.0) out.weights[i] /= s;
    }
    return out;
}

std::vector<ShiftOperator> normalize_rows(const std::vector<ShiftOperator>& shifts) {
    std::vector<ShiftOperator> out;
    out.reserve(shifts.size());
    for (const auto& s : shifts) out.push_back(normalize_rows(s));
    return out;
}

ShiftOperator scale_weights(const ShiftOperator& shift, double factor) {
    if (factor < 0.0) throw std::invalid_argument("negative scale factor");
    ShiftOperator out = shift;
    for (double& w : out.weights) w *= factor;
    return out;
}

}  // namespace relmp
