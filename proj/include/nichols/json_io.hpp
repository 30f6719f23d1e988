#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nichols/relations.hpp"
#include "nichols/specialize.hpp"

namespace nichols {

using nlohmann::json;

/// Parse of the canonical scalar text form (inverse of Scalar::str).
Scalar scalar_from_string(const std::string& text);

json tensor_to_json(const TensorElement& x);
TensorElement tensor_from_json(const json& j);

json classical_to_json(const ClassicalElement& x);

/// Parsed matrix input: the braiding actually used plus the Cartan data when
/// the source provides it.
struct MatrixSpec {
    BraidingMatrix braiding;
    std::optional<RationalMatrix> cartan; // averaged when averaging was requested
    bool averaged = false;
    json echo; // original input object, with the averaging flag recorded
};

/// Accepts {"cartan": [[int]]} or {"braiding_exponents_doubled": [[int]]}
/// (entries are t-exponents, i.e. doubled q-exponents). `average` symmetrizes
/// Cartan input before building the braiding.
MatrixSpec matrix_from_json(const json& j, bool average);
MatrixSpec matrix_from_file(const std::string& path, bool average);

json block_relations_to_json(const BlockRelations& b);
json relation_set_to_json(const MatrixSpec& matrix, const RelationSet& set);

/// Rebuilds a relation table; when `verify`, every relation is re-checked for
/// annihilation by the one-sided differential element (VerificationFailure).
RelationSet relation_set_from_json(const BraidingMatrix& A, const json& j, bool verify);

json balance_report_to_json(const BalanceReport& r);
json dims_to_json(const std::vector<GradedDims>& dims);

} // namespace nichols
