#include "fixhorn/formats/structure_json.hpp"

#include <stdexcept>

#include "fixhorn/formats/problem.hpp"

namespace fixhorn {

namespace {

using nlohmann::json;

std::string element_text(const json& v, const std::string& where) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    throw std::invalid_argument(where + ": expected a domain element");
}

Element element_of(const FiniteStructure& m, const json& v, const std::string& where) {
    std::string name = element_text(v, where);
    auto e = m.element(name);
    if (!e) {
        throw std::invalid_argument(where + ": " + name + " is not in the domain");
    }
    return *e;
}

std::size_t depth(const json& v) {
    std::size_t d = 0;
    const json* cur = &v;
    while (cur->is_array()) {
        ++d;
        if (cur->empty()) {
            break;
        }
        cur = &cur->front();
    }
    return d;
}

void fill(const FiniteStructure& m, const json& v, std::size_t remaining, const std::string& where,
          std::vector<Element>& out) {
    if (remaining == 0) {
        out.push_back(element_of(m, v, where));
        return;
    }
    if (!v.is_array() || v.size() != m.size()) {
        throw std::invalid_argument(where + ": expected an array of " + std::to_string(m.size()) +
                                    " entries");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        fill(m, v[i], remaining - 1, where + "[" + std::to_string(i) + "]", out);
    }
}

} // namespace

FiniteStructure structure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("domain") || !j["domain"].is_array()) {
        throw std::invalid_argument("structure: missing \"domain\" array");
    }
    std::vector<std::string> domain;
    for (std::size_t i = 0; i < j["domain"].size(); ++i) {
        domain.push_back(element_text(j["domain"][i], "domain[" + std::to_string(i) + "]"));
    }
    FiniteStructure m(std::move(domain));
    for (const auto& [key, _] : j.items()) {
        if (key != "domain" && key != "functions" && key != "relations" && key != "modulus") {
            throw std::invalid_argument("structure: unknown key \"" + key + "\"");
        }
    }
    if (j.contains("functions")) {
        for (const auto& [name, table] : j["functions"].items()) {
            FunctionTable t;
            t.arity = depth(table);
            fill(m, table, t.arity, "functions." + name, t.values);
            m.set_function(name, std::move(t));
        }
    }
    if (j.contains("relations")) {
        for (const auto& [name, rel] : j["relations"].items()) {
            std::string where = "relations." + name;
            const json* tuples = &rel;
            std::optional<std::size_t> arity;
            if (rel.is_object()) {
                if (!rel.contains("arity") || !rel.contains("tuples")) {
                    throw std::invalid_argument(where + ": needs \"arity\" and \"tuples\"");
                }
                arity = rel["arity"].get<std::size_t>();
                tuples = &rel["tuples"];
            }
            if (!tuples->is_array()) {
                throw std::invalid_argument(where + ": expected a tuple list");
            }
            std::vector<Tuple> rows;
            for (std::size_t i = 0; i < tuples->size(); ++i) {
                const json& row = (*tuples)[i];
                std::string w = where + "[" + std::to_string(i) + "]";
                Tuple t;
                if (row.is_array()) {
                    for (const auto& x : row) {
                        t.push_back(element_of(m, x, w));
                    }
                } else {
                    t.push_back(element_of(m, row, w));
                }
                if (arity && t.size() != *arity) {
                    throw std::invalid_argument(w + ": tuple has the wrong arity");
                }
                arity = t.size();
                rows.push_back(std::move(t));
            }
            if (!arity) {
                throw std::invalid_argument(where + ": empty relation needs an explicit arity");
            }
            m.set_relation(name, RelationTable(*arity, std::move(rows)));
        }
    }
    if (j.contains("modulus")) {
        m.set_numeral_modulus(j["modulus"].get<std::size_t>());
    }
    return m;
}

FiniteStructure load_structure(const std::filesystem::path& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
    return structure_from_json(j);
}

nlohmann::ordered_json structure_to_json(const FiniteStructure& m) {
    nlohmann::ordered_json j;
    j["domain"] = m.domain();
    nlohmann::ordered_json fns = nlohmann::ordered_json::object();
    for (const auto& [name, t] : m.functions()) {
        // Rebuild the nested array bottom-up: group values by the last argument.
        std::vector<nlohmann::ordered_json> level;
        for (auto v : t.values) {
            level.emplace_back(m.element_name(v));
        }
        for (std::size_t a = 0; a < t.arity; ++a) {
            std::vector<nlohmann::ordered_json> next;
            for (std::size_t i = 0; i < level.size(); i += m.size()) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (std::size_t k = 0; k < m.size(); ++k) {
                    arr.push_back(level[i + k]);
                }
                next.push_back(std::move(arr));
            }
            level = std::move(next);
        }
        fns[name] = level.front();
    }
    j["functions"] = fns;
    nlohmann::ordered_json rels = nlohmann::ordered_json::object();
    for (const auto& [name, r] : m.relations()) {
        nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
        for (const auto& t : r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (auto e : t) {
                row.push_back(m.element_name(e));
            }
            tuples.push_back(std::move(row));
        }
        rels[name] = {{"arity", r.arity()}, {"tuples", tuples}};
    }
    j["relations"] = rels;
    if (m.numeral_modulus()) {
        j["modulus"] = *m.numeral_modulus();
    }
    return j;
}

} // namespace fixhorn
