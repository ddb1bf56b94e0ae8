#pragma once

// JSON interchange for spectral fields, homogeneous forms, valuation
// currents, polytopes, and Crofton data.
//
// SpectralField: {n, L, layout: "circle-modes" | "sh-lm" | "ray-values",
//                 re: [...], im: [...]}
//   coefficient order: n=2 modes -L..L; n=3 (l,m) lexicographic, index
//   l^2 + l + m; n=1 the two ray values (+1, -1).
// HomForm: {space: {dim, label}, form_degree, value_degree, homogeneity,
//           unit: {orient: {...}, density: {...}}, atom: {re, im} | null,
//           coeffs: [{I: [...], J: [...], field: SpectralField}]}
// ValCurrent: HomForm fields plus {degree, parity, provenance}.

#include <json.hpp>

#include "valfour/crofton.hpp"
#include "valfour/valuations.hpp"

namespace valfour {

nlohmann::json to_json(const SpectralField& f);
SpectralField spectral_field_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HomForm& w);
HomForm homform_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValCurrent& v);
ValCurrent valcurrent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polytope& K);
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CroftonData& d);
CroftonData crofton_from_json(const nlohmann::json& j);

}  // namespace valfour
