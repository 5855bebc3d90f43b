#include "fixhorn/model/relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixhorn {

RelationTable::RelationTable(std::size_t arity, std::vector<Tuple> tuples)
    : arity_(arity), tuples_(std::move(tuples)) {
    for (const auto& t : tuples_) {
        if (t.size() != arity_) {
            throw std::invalid_argument("relation tuple of length " + std::to_string(t.size()) +
                                        " in a relation of arity " + std::to_string(arity_));
        }
    }
    std::sort(tuples_.begin(), tuples_.end());
    tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

RelationTable RelationTable::full(std::size_t arity, std::size_t domain_size) {
    RelationTable r(arity);
    std::size_t n = tuple_count(arity, domain_size);
    r.tuples_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.tuples_.push_back(tuple_at(i, arity, domain_size));
    }
    return r;
}

bool RelationTable::contains(const Tuple& t) const {
    return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

bool RelationTable::insert(Tuple t) {
    if (t.size() != arity_) {
        throw std::invalid_argument("tuple arity mismatch");
    }
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
    if (it != tuples_.end() && *it == t) {
        return false;
    }
    tuples_.insert(it, std::move(t));
    return true;
}

bool RelationTable::erase(const Tuple& t) {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
    if (it == tuples_.end() || *it != t) {
        return false;
    }
    tuples_.erase(it);
    return true;
}

bool RelationTable::subset_of(const RelationTable& other) const {
    return arity_ == other.arity_ &&
           std::includes(other.tuples_.begin(), other.tuples_.end(), tuples_.begin(), tuples_.end());
}

RelationTable RelationTable::complement(std::size_t domain_size) const {
    RelationTable all = full(arity_, domain_size);
    RelationTable out(arity_);
    std::set_difference(all.tuples_.begin(), all.tuples_.end(), tuples_.begin(), tuples_.end(),
                        std::back_inserter(out.tuples_));
    return out;
}

std::size_t tuple_count(std::size_t arity, std::size_t domain_size) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        n *= domain_size;
    }
    return n;
}

Tuple tuple_at(std::size_t rank, std::size_t arity, std::size_t domain_size) {
    Tuple t(arity);
    for (std::size_t i = arity; i-- > 0;) {
        t[i] = static_cast<Element>(rank % domain_size);
        rank /= domain_size;
    }
    return t;
}

std::size_t tuple_rank(const Tuple& t, std::size_t domain_size) {
    std::size_t r = 0;
    for (auto e : t) {
        r = r * domain_size + e;
    }
    return r;
}

} // namespace fixhorn
