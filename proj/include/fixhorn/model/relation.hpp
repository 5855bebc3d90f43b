#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fixhorn {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

// A finite k-ary relation over domain indices, kept as a sorted duplicate-free
// tuple list so equality and inclusion are exact and iteration is canonical.
class RelationTable {
public:
    explicit RelationTable(std::size_t arity = 0) : arity_(arity) {}
    RelationTable(std::size_t arity, std::vector<Tuple> tuples);
    RelationTable(std::size_t arity, std::initializer_list<Tuple> tuples)
        : RelationTable(arity, std::vector<Tuple>(tuples)) {}

    // All tuples over a domain of `domain_size` elements.
    static RelationTable full(std::size_t arity, std::size_t domain_size);

    std::size_t arity() const { return arity_; }
    std::size_t size() const { return tuples_.size(); }
    bool empty() const { return tuples_.empty(); }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    auto begin() const { return tuples_.begin(); }
    auto end() const { return tuples_.end(); }

    bool contains(const Tuple& t) const;
    // Returns true when the tuple was not present.
    bool insert(Tuple t);
    bool erase(const Tuple& t);

    bool subset_of(const RelationTable& other) const;
    RelationTable complement(std::size_t domain_size) const;

    friend bool operator==(const RelationTable&, const RelationTable&) = default;

private:
    std::size_t arity_;
    std::vector<Tuple> tuples_;
};

// Enumerates domain^arity in lexicographic order; `rank` is the position.
std::size_t tuple_count(std::size_t arity, std::size_t domain_size);
Tuple tuple_at(std::size_t rank, std::size_t arity, std::size_t domain_size);
std::size_t tuple_rank(const Tuple& t, std::size_t domain_size);

} // namespace fixhorn
