#include "fixhorn/imp/arith.hpp"

#include <stdexcept>

namespace fixhorn {

Signature arith_signature() {
    Signature sig;
    sig.add_function("+", 2);
    sig.add_function("-", 2);
    sig.add_function("*", 2);
    sig.add_predicate("<=", 2);
    sig.set_numerals(true);
    return sig;
}

FiniteStructure arith_structure(std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    std::vector<std::string> dom;
    for (std::size_t i = 0; i < m; ++i) {
        dom.push_back(std::to_string(i));
    }
    FiniteStructure s(dom);
    FunctionTable add{2, {}};
    FunctionTable sub{2, {}};
    FunctionTable mul{2, {}};
    std::vector<Tuple> le;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            add.values.push_back(static_cast<Element>((a + b) % m));
            sub.values.push_back(static_cast<Element>((a + m - b) % m));
            mul.values.push_back(static_cast<Element>((a * b) % m));
            if (a <= b) {
                le.push_back({static_cast<Element>(a), static_cast<Element>(b)});
            }
        }
    }
    s.set_function("+", std::move(add));
    s.set_function("-", std::move(sub));
    s.set_function("*", std::move(mul));
    s.set_relation("<=", RelationTable(2, std::move(le)));
    s.set_numeral_modulus(m);
    return s;
}

} // namespace fixhorn
