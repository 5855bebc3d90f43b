#pragma once

#include <vector>

#include "fixhorn/horn/system.hpp"
#include "fixhorn/imp/program.hpp"

namespace fixhorn {

// {pre} program {post}. Pre and post may be predicate-variable atoms over the
// program variables, which is how sp/wp queries are posed.
struct HoareTriple {
    Formula pre = Formula::top();
    Program program;
    Formula post = Formula::top();
};

struct VcResult {
    // Predicate variables of pre/post (first occurrence) followed by I1, I2, ...
    std::vector<PredicateVariable> vars;
    // Only the introduced I's, in allocation order.
    std::vector<PredicateVariable> invariants;
    // The conjuncts of the verification condition, each universally closed.
    std::vector<Formula> conditions;
    ClauseSet clauses;
    HornSystem system;
};

// Structural recursion:
//   skip:          pre -> post
//   x := t:        pre -> post[x := t]
//   p0; p1:        vc({pre} p0 {I}) /\ vc({I} p1 {post})
//   if B:          vc({pre /\ B} p0 {post}) /\ vc({pre /\ ~B} p1 {post})
//   while B do p0: vc({I /\ B} p0 {I}) /\ (pre -> I) /\ (I /\ ~B -> post)
// Fresh I's range over all program variables and are numbered in pre-order,
// skipping names used by pre/post. The result is asserted to be linear Horn.
VcResult vcgen(const HoareTriple& triple);

// Predicate variables occurring in `f`, in first-occurrence order.
std::vector<PredicateVariable> predicate_variables(const Formula& f);

} // namespace fixhorn
