#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fixhorn/affine/subspace.hpp"
#include "fixhorn/logic/formula.hpp"
#include "fixhorn/model/structure.hpp"

namespace fixhorn {

using Report = nlohmann::ordered_json;

// {"var": "X", "arity": 2, "size": 3, "tuples": [["a", "b"], ...]}
Report relation_report(const FiniteStructure& m, const std::string& var, const RelationTable& r);

// {"arity": 2, "empty": false, "dimension": 1, "equations": ["x0 - 1/2*x1 = 0"],
//  "matrix": [[["1","1"], ["-1","2"], ["0","1"]]]}; matrix entries are
// [numerator, denominator] over [A | b].
Report subspace_report(const AffineSubspace& s, const std::vector<std::string>& names);

// Indented key/value rendering. Arrays of scalars print on one line, tuples of
// element names as (a, b).
std::string render_text(const Report& r);

} // namespace fixhorn
