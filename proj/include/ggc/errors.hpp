#pragma once

#include <stdexcept>
#include <string>

namespace ggc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// structural / solver failures; `kind` is one of the fixed error tags
// (UNBOUND_VARIABLE, BLOCK_MISMATCH, SINGULAR_SYSTEM, NOT_INVARIANT,
// BASIS_DEFICIENT, STRUCTURE_VIOLATION, NOT_AUTOMORPHISM, REP_NOT_FAITHFUL,
// NOT_STRATIFIED, KIND_UNSUPPORTED, NEEDS_POLYNOMIAL, SHIFT_OUT_OF_RANGE, ...)
struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& what)
        : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

} // namespace ggc
