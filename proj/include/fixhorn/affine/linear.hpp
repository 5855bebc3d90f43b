#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fixhorn {

using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;
// Row-major; every row has the same length.
using Matrix = std::vector<Vector>;

// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Matrix& rows);

// Basis of {v | rows * v = 0} for rows of length n, one vector per free column.
Matrix null_space(Matrix rows, std::size_t n);

Rational dot(const Vector& a, const Vector& b);

// Accepts "3", "-2", "1/2".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

} // namespace fixhorn
