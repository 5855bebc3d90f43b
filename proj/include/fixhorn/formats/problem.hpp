#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixhorn/formats/formula_parser.hpp"

namespace fixhorn {

enum class Mode { Concrete, Affine };

std::string to_string(Mode m);

// One clause-set problem:
//   (mode concrete|affine)          optional, before anything else
//   (declare-fun f 2) (declare-pred P 1) (declare-var X 2)
//   (structure "path.json")         optional
//   (clause <formula>) ...
// Affine mode predeclares + - * (binary) and numeral constants.
struct ProblemFile {
    Mode mode = Mode::Concrete;
    Signature signature;
    std::vector<PredicateVariable> vars;
    std::optional<std::string> structure;
    std::vector<Formula> clauses;
    // Source location of each clause, parallel to `clauses`; not part of equality.
    std::vector<SourceLocation> clause_locations;

    FormulaContext context() const;

    friend bool operator==(const ProblemFile& a, const ProblemFile& b) {
        return a.mode == b.mode && a.signature == b.signature && a.vars == b.vars &&
               a.structure == b.structure && a.clauses == b.clauses;
    }
};

Signature affine_signature();

ProblemFile parse_problem(std::string_view text);
// Throws std::runtime_error when the file cannot be read.
ProblemFile load_problem(const std::filesystem::path& path);
std::string print_problem(const ProblemFile& p);

std::string read_file(const std::filesystem::path& path);

} // namespace fixhorn
