#pragma once

#include <string>

#include "fixhorn/logic/formula.hpp"

namespace fixhorn {

// S-expression rendering, the inverse of formats::parse_formula:
//   (forall (u v) (=> (and (P u) (X u v)) (Y u)))
//   (lfp X ((X (_arg0) (= _arg0 a))) t)
// Nested quantifiers of the same kind are printed as one binder list.
std::string to_sexpr(const Term& t);
std::string to_sexpr(const Formula& f);
std::string to_sexpr(const FixpointSystem& sys);

} // namespace fixhorn
