#include "fixhorn/affine/subspace.hpp"

#include <stdexcept>

namespace fixhorn {

AffineSubspace AffineSubspace::empty(std::size_t k) {
    AffineSubspace s;
    s.k_ = k;
    s.empty_ = true;
    return s;
}

AffineSubspace AffineSubspace::full(std::size_t k) {
    AffineSubspace s;
    s.k_ = k;
    return s;
}

AffineSubspace AffineSubspace::point(const Vector& p) { return from_generators(p, {}); }

AffineSubspace AffineSubspace::from_equations(std::size_t k, Matrix rows) {
    for (const auto& r : rows) {
        if (r.size() != k + 1) {
            throw std::invalid_argument("affine equation has wrong length");
        }
    }
    auto pivots = rref(rows);
    // a pivot in the constant column means 0 = 1
    if (!pivots.empty() && pivots.back() == k) {
        return empty(k);
    }
    AffineSubspace s;
    s.k_ = k;
    s.rows_ = std::move(rows);
    return s;
}

AffineSubspace AffineSubspace::from_generators(const Vector& p, const Matrix& directions) {
    const std::size_t k = p.size();
    for (const auto& d : directions) {
        if (d.size() != k) {
            throw std::invalid_argument("generator has wrong length");
        }
    }
    // a . x = a . p for every a orthogonal to all directions
    Matrix rows;
    for (auto& a : null_space(directions, k)) {
        Rational rhs = dot(a, p);
        a.push_back(rhs);
        rows.push_back(std::move(a));
    }
    return from_equations(k, std::move(rows));
}

AffineSubspace AffineSubspace::hull(std::size_t k, const std::vector<Vector>& points) {
    if (points.empty()) {
        return empty(k);
    }
    Matrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vector d(k);
        for (std::size_t j = 0; j < k; ++j) {
            d[j] = points[i].at(j) - points[0][j];
        }
        dirs.push_back(std::move(d));
    }
    if (points[0].size() != k) {
        throw std::invalid_argument("point has wrong length");
    }
    return from_generators(points[0], dirs);
}

int AffineSubspace::dimension() const {
    return empty_ ? -1 : static_cast<int>(k_ - rows_.size());
}

Vector AffineSubspace::base_point() const {
    if (empty_) {
        throw std::logic_error("EMPTY has no points");
    }
    Vector p(k_, Rational(0));
    for (const auto& r : rows_) {
        std::size_t c = 0;
        while (r[c] == 0) {
            ++c;
        }
        p[c] = r[k_];
    }
    return p;
}

Matrix AffineSubspace::directions() const {
    if (empty_) {
        throw std::logic_error("EMPTY has no directions");
    }
    Matrix homogeneous;
    for (const auto& r : rows_) {
        homogeneous.emplace_back(r.begin(), r.end() - 1);
    }
    return null_space(homogeneous, k_);
}

std::vector<Vector> AffineSubspace::spanning_points() const {
    if (empty_) {
        return {};
    }
    Vector p = base_point();
    std::vector<Vector> out{p};
    for (const auto& d : directions()) {
        Vector q = p;
        for (std::size_t i = 0; i < k_; ++i) {
            q[i] += d[i];
        }
        out.push_back(std::move(q));
    }
    return out;
}

bool AffineSubspace::contains(const Vector& x) const {
    if (x.size() != k_) {
        throw std::invalid_argument("point has wrong length");
    }
    if (empty_) {
        return false;
    }
    for (const auto& r : rows_) {
        Rational s = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            s += r[i] * x[i];
        }
        if (s != r[k_]) {
            return false;
        }
    }
    return true;
}

void AffineSubspace::check_arity(const AffineSubspace& other) const {
    if (other.k_ != k_) {
        throw std::invalid_argument("affine subspaces of different arity");
    }
}

bool AffineSubspace::leq(const AffineSubspace& other) const {
    check_arity(other);
    if (empty_) {
        return true;
    }
    if (other.empty_) {
        return false;
    }
    for (const auto& q : spanning_points()) {
        if (!other.contains(q)) {
            return false;
        }
    }
    return true;
}

AffineSubspace AffineSubspace::join(const AffineSubspace& other) const {
    check_arity(other);
    if (empty_) {
        return other;
    }
    if (other.empty_) {
        return *this;
    }
    auto points = spanning_points();
    auto more = other.spanning_points();
    points.insert(points.end(), more.begin(), more.end());
    return hull(k_, points);
}

AffineSubspace AffineSubspace::meet(const AffineSubspace& other) const {
    check_arity(other);
    if (empty_ || other.empty_) {
        return empty(k_);
    }
    return meet_equations(other.rows_);
}

AffineSubspace AffineSubspace::meet_equations(const Matrix& rows) const {
    if (empty_) {
        return *this;
    }
    Matrix all = rows_;
    all.insert(all.end(), rows.begin(), rows.end());
    return from_equations(k_, std::move(all));
}

AffineSubspace AffineSubspace::image(const Matrix& m, const Vector& c) const {
    const std::size_t out = c.size();
    if (m.size() != out) {
        throw std::invalid_argument("affine map: row count mismatch");
    }
    for (const auto& r : m) {
        if (r.size() != k_) {
            throw std::invalid_argument("affine map: column count mismatch");
        }
    }
    if (empty_) {
        return empty(out);
    }
    auto apply = [&](const Vector& x, bool shift) {
        Vector y(out);
        for (std::size_t i = 0; i < out; ++i) {
            y[i] = dot(m[i], x) + (shift ? c[i] : Rational(0));
        }
        return y;
    };
    Matrix dirs;
    for (const auto& d : directions()) {
        dirs.push_back(apply(d, false));
    }
    return from_generators(apply(base_point(), true), dirs);
}

AffineSubspace AffineSubspace::preimage(const Matrix& m, const Vector& c, std::size_t n) const {
    if (m.size() != k_ || c.size() != k_) {
        throw std::invalid_argument("affine map: row count mismatch");
    }
    for (const auto& r : m) {
        if (r.size() != n) {
            throw std::invalid_argument("affine map: column count mismatch");
        }
    }
    if (empty_) {
        return empty(n);
    }
    // A (M x + c) = b  becomes  (A M) x = b - A c
    Matrix rows;
    for (const auto& r : rows_) {
        Vector row(n + 1, Rational(0));
        Rational rhs = r[k_];
        for (std::size_t i = 0; i < k_; ++i) {
            if (r[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                row[j] += r[i] * m[i][j];
            }
            rhs -= r[i] * c[i];
        }
        row[n] = rhs;
        rows.push_back(std::move(row));
    }
    return from_equations(n, std::move(rows));
}

std::vector<std::string> AffineSubspace::to_strings(const std::vector<std::string>& names) const {
    if (names.size() != k_) {
        throw std::invalid_argument("wrong number of coordinate names");
    }
    if (empty_) {
        return {"false"};
    }
    std::vector<std::string> out;
    for (const auto& r : rows_) {
        std::string lhs;
        for (std::size_t i = 0; i < k_; ++i) {
            if (r[i] == 0) {
                continue;
            }
            Rational a = abs(r[i]);
            if (lhs.empty()) {
                lhs = r[i] < 0 ? "-" : "";
            } else {
                lhs += r[i] < 0 ? " - " : " + ";
            }
            if (a != 1) {
                lhs += fixhorn::to_string(a) + "*";
            }
            lhs += names[i];
        }
        out.push_back(lhs + " = " + fixhorn::to_string(r[k_]));
    }
    if (out.empty()) {
        out.push_back("true");
    }
    return out;
}

std::string AffineSubspace::to_string(const std::vector<std::string>& names) const {
    std::string s;
    for (const auto& e : to_strings(names)) {
        s += (s.empty() ? "" : ", ") + e;
    }
    return "{" + s + "}";
}

std::string AffineSubspace::to_string() const { return to_string(default_coordinate_names(k_)); }

std::vector<std::string> default_coordinate_names(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

} // namespace fixhorn
