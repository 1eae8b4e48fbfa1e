#pragma once

#include <json.hpp>
#include <optional>

#include "liestab/forms.hpp"
#include "liestab/grid.hpp"
#include "liestab/liealg.hpp"

namespace liestab {

using Json = nlohmann::ordered_json;

// Matrix format: {"field": "<spec>", "rows": [["<scalar>", ...], ...]}.
// Entries are scalar strings; plain JSON integers are also accepted.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j,
                             std::optional<FieldSpec> field_override = std::nullopt);

Json algebra_to_json(const LieSubalgebra& g);

Json formclass_to_json(const FormClass& fc);

Json report_to_json(const StructureReport& r);

Json grid_config_to_json(const GridConfig& cfg);
GridConfig grid_config_from_json(const nlohmann::json& j);

Json aggregate_to_json(const AggregateReport& agg, bool include_timings);

}  // namespace liestab
