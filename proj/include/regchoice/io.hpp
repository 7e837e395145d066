#pragma once

// Document formats: flat-PD diagrams, region choice matrices, decomposition
// exports, add-1 certificates, and DOT output.

#include <string>
#include <string_view>

#include <json.hpp>

#include "regchoice/diagram.hpp"
#include "regchoice/incidence.hpp"
#include "regchoice/regionchoice.hpp"
#include "regchoice/zlinalg.hpp"

namespace regchoice::io {

using nlohmann::json;

/// {"name": ..., "crossings": [[a, b, c, d], ...]}. Throws ValidationError.
FlatDiagram parse_flat_pd(std::string_view text);
json flat_pd_to_json(const FlatDiagram& d);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
json vector_to_json(std::span<const Integer> v);
IntVector vector_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// {"rule", "row_labels", "col_labels", "entries"}.
json matrix_document(const RegionChoiceMatrix& m);
RegionChoiceMatrix parse_matrix_document(const json& j);
/// Column-aligned table with labels.
std::string render_matrix_text(const RegionChoiceMatrix& m);

/// {"P", "Q", "S", "is_e00", "rank", "log": [{"kind", "target", "source",
/// "multiplier"}]}.
json decomposition_to_json(const E00Decomposition& dec);
E00Decomposition decomposition_from_json(const json& j);

/// {"diagram", "fingerprint", "rule", "crossing", "assignment", "residual",
/// "path"}; "residual" is A u - e_v.
json certificate_to_json(const FlatDiagram& d, const Add1Certificate& cert);
Add1Certificate certificate_from_json(const json& j);
std::string fingerprint_hex(const FlatDiagram& d);

/// Crossings as nodes, arcs as edges labelled with their side regions.
std::string to_dot(const FlatDiagram& d);

} // namespace regchoice::io
