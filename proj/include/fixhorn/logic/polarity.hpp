#pragma once

#include <cstdint>
#include <string_view>

#include "fixhorn/logic/formula.hpp"

namespace fixhorn {

// Bit 0: occurs positively. Bit 1: occurs negatively.
enum class Polarity : std::uint8_t {
    Absent = 0,
    Positive = 1,
    Negative = 2,
    Both = 3,
};

constexpr Polarity operator|(Polarity a, Polarity b) {
    return static_cast<Polarity>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}

// Swap the positive and negative components.
constexpr Polarity flip(Polarity p) {
    auto bits = static_cast<std::uint8_t>(p);
    return static_cast<Polarity>(((bits & 1u) << 1) | ((bits & 2u) >> 1));
}

constexpr bool occurs_positively(Polarity p) { return (static_cast<std::uint8_t>(p) & 1u) != 0; }
constexpr bool occurs_negatively(Polarity p) { return (static_cast<std::uint8_t>(p) & 2u) != 0; }

std::string_view to_string(Polarity p);

// How `var` occurs in `f`. Negation flips, the antecedent of an implication
// flips, quantifiers are transparent. Inside an lfp atom the bodies of the
// system are scanned unless the system binds `var`.
Polarity polarity(const PredicateVariable& var, const Formula& f);

} // namespace fixhorn
