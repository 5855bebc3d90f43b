#include "fixhorn/affine/linear.hpp"

#include <stdexcept>

namespace fixhorn {

std::vector<std::size_t> rref(Matrix& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        Rational lead = rows[r][c];
        for (auto& x : rows[r]) {
            x /= lead;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) {
                continue;
            }
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

Matrix null_space(Matrix rows, std::size_t n) {
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    Matrix basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -rows[i][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: " + text);
    }
}

std::string to_string(const Rational& q) { return q.str(); }

} // namespace fixhorn
