#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "fixhorn/affine/subspace.hpp"

namespace fixhorn {

// A family of lattices indexed by arity, with abstraction from finite point
// sets and concretization given as a membership test.
template <class D>
concept GaloisDomain = requires(const D& d, std::size_t k, const typename D::Element& e,
                                const std::vector<typename D::Point>& xs,
                                const typename D::Point& p) {
    { d.bottom(k) } -> std::same_as<typename D::Element>;
    { d.top(k) } -> std::same_as<typename D::Element>;
    { d.leq(e, e) } -> std::same_as<bool>;
    { d.join(e, e) } -> std::same_as<typename D::Element>;
    { d.alpha(k, xs) } -> std::same_as<typename D::Element>;
    { d.gamma_contains(e, p) } -> std::same_as<bool>;
    // finite subset of gamma(e) whose abstraction should give e back
    { d.gamma_sample(e) } -> std::same_as<std::vector<typename D::Point>>;
};

// Affine subspaces of Q^k, alpha = affine hull, gamma = identity embedding.
struct AffineDomain {
    using Element = AffineSubspace;
    using Point = Vector;

    static constexpr bool finite_height = true;
    // longest strictly increasing chain: EMPTY, then dimensions 0..k
    static std::size_t height(std::size_t k) { return k + 1; }

    Element bottom(std::size_t k) const { return AffineSubspace::empty(k); }
    Element top(std::size_t k) const { return AffineSubspace::full(k); }
    bool leq(const Element& a, const Element& b) const { return a.leq(b); }
    Element join(const Element& a, const Element& b) const { return a.join(b); }
    Element alpha(std::size_t k, const std::vector<Point>& xs) const { return AffineSubspace::hull(k, xs); }
    bool gamma_contains(const Element& e, const Point& p) const { return e.contains(p); }
    std::vector<Point> gamma_sample(const Element& e) const { return e.spanning_points(); }
};

static_assert(GaloisDomain<AffineDomain>);

struct GaloisCase {
    std::size_t arity = 0;
    std::vector<Vector> sample;
    AffineSubspace candidate;
};

struct GaloisReport {
    std::size_t pairs = 0;
    std::size_t law_failures = 0;          // X in gamma(Y) disagrees with alpha(X) <= Y
    std::size_t extensivity_failures = 0;  // X not inside gamma(alpha(X))
    std::size_t roundtrip_failures = 0;    // alpha(gamma(Y)) != Y
    std::size_t law_holds_both_true = 0;
    std::size_t law_holds_both_false = 0;
    std::vector<std::string> messages;

    bool ok() const { return law_failures + extensivity_failures + roundtrip_failures == 0; }
};

template <GaloisDomain D>
GaloisReport galois_law_check(const D& domain, std::size_t k, const std::vector<typename D::Point>& sample,
                              const typename D::Element& candidate, GaloisReport report = {}) {
    ++report.pairs;
    bool inside = true;
    for (const auto& p : sample) {
        inside = inside && domain.gamma_contains(candidate, p);
    }
    auto a = domain.alpha(k, sample);
    bool below = domain.leq(a, candidate);
    if (inside != below) {
        ++report.law_failures;
        report.messages.push_back("pair " + std::to_string(report.pairs - 1) + ": X in gamma(Y) is " +
                                  (inside ? "true" : "false") + " but alpha(X) <= Y is " +
                                  (below ? "true" : "false"));
    } else if (inside) {
        ++report.law_holds_both_true;
    } else {
        ++report.law_holds_both_false;
    }
    for (const auto& p : sample) {
        if (!domain.gamma_contains(a, p)) {
            ++report.extensivity_failures;
            report.messages.push_back("pair " + std::to_string(report.pairs - 1) + ": alpha(X) misses a point of X");
            break;
        }
    }
    if (!(domain.alpha(k, domain.gamma_sample(candidate)) == candidate)) {
        ++report.roundtrip_failures;
        report.messages.push_back("pair " + std::to_string(report.pairs - 1) + ": alpha(gamma(Y)) != Y");
    }
    return report;
}

template <GaloisDomain D>
GaloisReport galois_law_check(const D& domain, const std::vector<GaloisCase>& cases) {
    GaloisReport report;
    for (const auto& c : cases) {
        report = galois_law_check(domain, c.arity, c.sample, c.candidate, std::move(report));
    }
    return report;
}

} // namespace fixhorn
