#include "fixhorn/cli/report.hpp"

#include <sstream>

namespace fixhorn {

Report relation_report(const FiniteStructure& m, const std::string& var, const RelationTable& r) {
    Report tuples = Report::array();
    for (const auto& t : r) {
        Report row = Report::array();
        for (auto e : t) {
            row.push_back(m.element_name(e));
        }
        tuples.push_back(std::move(row));
    }
    return Report{{"var", var}, {"arity", r.arity()}, {"size", r.size()}, {"tuples", std::move(tuples)}};
}

Report subspace_report(const AffineSubspace& s, const std::vector<std::string>& names) {
    Report matrix = Report::array();
    for (const auto& row : s.equations()) {
        Report r = Report::array();
        for (const auto& q : row) {
            r.push_back(Report::array({numerator(q).str(), denominator(q).str()}));
        }
        matrix.push_back(std::move(r));
    }
    return Report{{"arity", s.arity()},
                  {"empty", s.is_empty()},
                  {"dimension", s.dimension()},
                  {"equations", s.to_strings(names)},
                  {"matrix", std::move(matrix)}};
}

namespace {

std::string scalar(const Report& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "-";
    }
    return v.dump();
}

bool all_scalars(const Report& a) {
    for (const auto& x : a) {
        if (x.is_structured()) {
            return false;
        }
    }
    return true;
}

// [["a","b"],["c","d"]] -> (a, b) (c, d)
bool is_tuple_list(const Report& a) {
    for (const auto& x : a) {
        if (!x.is_array() || !all_scalars(x)) {
            return false;
        }
    }
    return true;
}

std::string inline_array(const Report& a) {
    std::string s;
    for (const auto& x : a) {
        s += (s.empty() ? "" : " ");
        if (x.is_array()) {
            std::string t;
            for (const auto& y : x) {
                t += (t.empty() ? "" : ", ") + scalar(y);
            }
            s += "(" + t + ")";
        } else {
            s += scalar(x);
        }
    }
    return s;
}

void render(const Report& r, int indent, std::ostringstream& out) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : r.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render(value, indent + 2, out);
        } else if (value.is_array() && value.empty()) {
            out << pad << key << ": (none)\n";
        } else if (value.is_array() && all_scalars(value)) {
            bool strings = value.front().is_string();
            if (strings && value.size() > 1) {
                out << pad << key << ":\n";
                for (const auto& x : value) {
                    out << pad << "  " << scalar(x) << "\n";
                }
            } else {
                out << pad << key << ": " << inline_array(value) << "\n";
            }
        } else if (value.is_array() && is_tuple_list(value)) {
            out << pad << key << ": " << inline_array(value) << "\n";
        } else if (value.is_array()) {
            out << pad << key << ":\n";
            for (const auto& x : value) {
                if (x.is_object()) {
                    out << pad << "  -\n";
                    render(x, indent + 4, out);
                } else if (x.is_array()) {
                    out << pad << "  - " << inline_array(x) << "\n";
                } else {
                    out << pad << "  - " << scalar(x) << "\n";
                }
            }
        } else {
            out << pad << key << ": " << scalar(value) << "\n";
        }
    }
}

} // namespace

std::string render_text(const Report& r) {
    std::ostringstream out;
    render(r, 0, out);
    return out.str();
}

} // namespace fixhorn
