#pragma once

#include <string>

#include <json.hpp>

#include "hopfoid/hopf.hpp"
#include "hopfoid/report.hpp"

namespace hopfoid {

using Json = nlohmann::ordered_json;

/// Scalars are arrays of "p/q" strings in the power basis of `field`, one
/// entry per coordinate; without a field the scalar must be rational and is
/// written as a one-element array.
Json to_json(const Scalar& s, const CycloField* field);
Scalar scalar_from_json(const Json& j, const CycloField* field);

/// [[index, scalar], ...]
Json to_json(const Vec& v, const CycloField* field);
Vec vec_from_json(const Json& j, const CycloField* field);

/// {"rows", "cols", "columns": [[j, vec], ...]} with zero columns omitted.
Json to_json(const LinearMap& m, const CycloField* field);
LinearMap linear_map_from_json(const Json& j, const CycloField* field);

/// {"dim", "unit", "mult": [[i, j, [[k, scalar], ...]], ...], "labels"}, zero
/// products omitted.
Json to_json(const StructAlgebra& a, const CycloField* field);
StructAlgebra algebra_from_json(const Json& j, const CycloField* field);

/// Algebra JSON plus "coproduct", "counit" and "antipode" matrices.
Json to_json(const HopfAlgebra& h, const CycloField* field);

/// Checks in report order, then "paper_discrepancies"; timing_ms only when
/// `with_timing`.
Json to_json(const VerificationReport& r, bool with_timing);
std::string to_text(const VerificationReport& r, bool with_timing);

}  // namespace hopfoid
