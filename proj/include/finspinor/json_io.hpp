#pragma once

#include <string_view>

#include <json.hpp>

#include "finspinor/herm.hpp"
#include "finspinor/metric.hpp"
#include "finspinor/types.hpp"

namespace finspinor {

/// File formats. Complex numbers are serialized as two-element [re, im]
/// arrays, matrices as row-major entry lists:
///
///   matrix document: {"n": N, "entries": [[re, im] x N*N]}
///   basis document:  {"n": N, "basis_id": s, "elements": [entries x N*N],
///                     "duals": [entries x N*N]}
///   metric document: {"n": N, "basis_id": s,
///                     "coefficients": [{"indices": [N ints], "value": v}]}
///   map document:    {"n": N, "rows": N*N, "entries": [N^4 reals]}
///
/// Readers throw DomainError on schema violations and let nlohmann's
/// exceptions propagate on malformed JSON.

nlohmann::json matrix_document(const CMatrix& m);

/// Parses a matrix document. When expected_dim > 0 the document's "n" must
/// match it.
CMatrix matrix_from_document(const nlohmann::json& doc, int expected_dim = -1);

nlohmann::json basis_document(const HermBasis& basis,
                              std::string_view basis_id = kStandardBasisId);

/// Rebuilds the basis from the stored elements (duals are recomputed) and
/// cross-checks the stored duals against the recomputed ones.
HermBasis basis_from_document(const nlohmann::json& doc);

nlohmann::json metric_document(const FinslerMetric& metric,
                               std::string_view basis_id = kStandardBasisId);

FinslerMetric metric_from_document(const nlohmann::json& doc);

nlohmann::json fl_matrix_document(const FLMatrix& map);

FLMatrix fl_matrix_from_document(const nlohmann::json& doc);

}  // namespace finspinor
