#pragma once

#include <stdexcept>
#include <string>

namespace fixhorn {

// Wrong number of arguments for a symbol or predicate variable.
class ArityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A fixed-point system whose bound variables occur negatively.
class PositivityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A formula refers to a symbol the signature does not declare.
class UndeclaredSymbolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fixhorn
