#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fixhorn/affine/linear.hpp"

namespace fixhorn {

// An affine subspace of Q^k, kept as the RREF of its equation system [A | b].
// Two subspaces are equal iff their representations are equal.
class AffineSubspace {
public:
    static AffineSubspace empty(std::size_t k);
    static AffineSubspace full(std::size_t k);
    static AffineSubspace point(const Vector& p);
    // Rows have k + 1 entries: coefficients, then the right-hand side.
    static AffineSubspace from_equations(std::size_t k, Matrix rows);
    // p + span(directions).
    static AffineSubspace from_generators(const Vector& p, const Matrix& directions);
    // Affine hull; EMPTY for no points.
    static AffineSubspace hull(std::size_t k, const std::vector<Vector>& points);

    std::size_t arity() const { return k_; }
    bool is_empty() const { return empty_; }
    // -1 for EMPTY.
    int dimension() const;
    // RREF rows of [A | b]; empty for the full space and for EMPTY.
    const Matrix& equations() const { return rows_; }

    // Particular point and direction basis. Throws std::logic_error on EMPTY.
    Vector base_point() const;
    Matrix directions() const;
    // base point and base point + each direction: a finite set whose hull is *this.
    std::vector<Vector> spanning_points() const;

    bool contains(const Vector& x) const;
    bool leq(const AffineSubspace& other) const;
    AffineSubspace join(const AffineSubspace& other) const;
    AffineSubspace meet(const AffineSubspace& other) const;
    AffineSubspace meet_equations(const Matrix& rows) const;
    // {M x + c | x in *this}; M has one row per output coordinate.
    AffineSubspace image(const Matrix& m, const Vector& c) const;
    // {x in Q^n | M x + c in *this}; M is arity() x n.
    AffineSubspace preimage(const Matrix& m, const Vector& c, std::size_t n) const;

    // Equations over the given names, e.g. "x - 1/2*y = 0"; "false" for EMPTY,
    // "true" for the full space.
    std::vector<std::string> to_strings(const std::vector<std::string>& names) const;
    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string() const;

    friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

private:
    void check_arity(const AffineSubspace& other) const;

    std::size_t k_ = 0;
    bool empty_ = false;
    Matrix rows_;
};

std::vector<std::string> default_coordinate_names(std::size_t k);

} // namespace fixhorn
