#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "fixhorn/affine/abstract_fixpoint.hpp"
#include "fixhorn/formats/problem.hpp"
#include "generators.hpp"

namespace fixhorn::oracle {

using PointSet = std::set<Vector>;

// Rational evaluation of numerals, +, -, * under a variable binding.
Rational eval_rational(const Term& t, const std::vector<std::string>& names, const Vector& values);

// Direct rational evaluation of a constraint: and, not, =, and base predicates
// le / <= read as <=.
bool holds_rational(const Formula& f, const std::vector<std::string>& names, const Vector& values);

// Points derivable within `rounds` naive rounds of the base and induction
// clauses. Base clauses must be ground; each induction clause variable must
// occur as a plain argument of a body atom.
std::vector<PointSet> unroll(const HornSystem& system, std::size_t rounds);

// One round of the concrete operator F applied to finite sets.
std::vector<PointSet> apply_concrete(const HornSystem& system, const std::vector<PointSet>& sets);

} // namespace fixhorn::oracle

namespace fixhorn::gen {

Rational random_rational(Rng& rng);
Vector random_point(Rng& rng, std::size_t k);
// EMPTY with probability 1/(k+2), otherwise the hull of a random point and up
// to k random directions.
AffineSubspace random_subspace(Rng& rng, std::size_t k);

} // namespace fixhorn::gen

namespace fixhorn::corpus {

// The affine corpus: karr.horn, mutual.horn and data/affine/*.horn.
std::vector<std::filesystem::path> affine_files(const std::filesystem::path& data_dir);

} // namespace fixhorn::corpus
