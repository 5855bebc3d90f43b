#pragma once

#include <cstddef>

#include "fixhorn/logic/signature.hpp"
#include "fixhorn/model/structure.hpp"

namespace fixhorn {

// + - * (binary), numerals, and the predicate <=.
Signature arith_signature();

// Z_m: elements "0".."m-1", modular + - *, numerals read mod m, and <= as the
// order on the representatives 0..m-1 (not compatible with + at the seam).
FiniteStructure arith_structure(std::size_t m);

} // namespace fixhorn
