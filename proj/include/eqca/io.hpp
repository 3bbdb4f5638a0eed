#pragma once

#include <string>

#include "json.hpp"

#include "eqca/classical.hpp"
#include "eqca/field.hpp"
#include "eqca/fock.hpp"
#include "eqca/localop.hpp"
#include "eqca/qca.hpp"

namespace eqca::io {

using nlohmann::json;

// Rationals serialize as "p/q" strings ("p" when the denominator is 1).
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

// Coordinates serialize as arrays of integers (decimal strings beyond the
// int64 range, so nothing is ever truncated).
json coord_to_json(const CellCoord& c);
CellCoord coord_from_json(const json& j);

json neighborhood_to_json(const Neighborhood& nb);
Neighborhood neighborhood_from_json(const json& j);

// A configuration is a sorted list of [coord, symbol] pairs.
json config_to_json(const Config& c);
Config config_from_json(const json& j);

// A scalar is its coefficient vector of rational strings.
json scalar_to_json(const Scalar& a);
Scalar scalar_from_json(const json& j, const FieldSpec* spec);

// A state vector is a list of {config, coeff} terms in canonical order.
json statevector_to_json(const StateVector& v);
StateVector statevector_from_json(const json& j, const FieldSpec* spec);

// Matrices are flat row-major lists of scalars.
json matrix_to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const json& j, const FieldSpec* spec, std::size_t rows,
                              std::size_t cols);

json localmap_to_json(const LocalMap& op);
LocalMap localmap_from_json(const json& j, const FieldSpec* spec);

json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);

json classical_rule_to_json(const ClassicalRule& rule);
ClassicalRule classical_rule_from_json(const json& j);

// {"offsets": [...], "K": flat row-major}; the alphabet size is recovered
// from dim(K) = n^(r+1) (an explicit "n" wins when present).
json qca_rule_to_json(const QcaRule& rule);
QcaRule qca_rule_from_json(const json& j, const FieldSpec* spec);

/// Canonical serialization: sorted object keys (the default for this json
/// type), two-space indent, trailing newline. Identical data gives
/// byte-identical output.
std::string canonical_dump(const json& j);

std::string sha256_hex(const std::string& data);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace eqca::io
