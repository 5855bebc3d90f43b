#pragma once

#include <filesystem>

#include <json.hpp>

#include "fixhorn/model/structure.hpp"

namespace fixhorn {

// {"domain": ["a", "b"],
//  "functions": {"c": "a", "f": ["b", "a"], "g": [["a", "b"], ["b", "b"]]},
//  "relations": {"E": [["a", "b"]], "P": ["a"], "Q": {"arity": 2, "tuples": []}},
//  "modulus": 2}
// Function tables nest one array level per argument. Numbers are accepted as
// element names. Errors are std::invalid_argument with a JSON path.
FiniteStructure structure_from_json(const nlohmann::json& j);
FiniteStructure load_structure(const std::filesystem::path& path);
nlohmann::ordered_json structure_to_json(const FiniteStructure& m);

} // namespace fixhorn
