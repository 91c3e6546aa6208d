#pragma once

#include "ordens/field.hpp"

#include <stdexcept>
#include <string_view>

namespace ordens {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Accepts "Q", "Q(sqrt D)", "Q(sqrt(D))" and "Q(sqrtD)"; whitespace is
/// ignored. Non-squarefree D raises DomainError, malformed text ParseError.
FieldSpec parse_field(std::string_view text);

/// Element grammar:
///
///     element := rat | rat sign rat "*sqrt(" int ")" | sign rat "*sqrt(" int ")"
///              | "i" | "zeta3" | element "*" element | element "^" uint
///     rat     := int | int "/" posint
///
/// "i" is sqrt(-1) (D = -1 only) and "zeta3" is -1/2 + 1/2*sqrt(-3)
/// (D = -3 only). "^" binds tighter than "*"; a leading sign belongs to
/// the rational it precedes, so "-2^3" is (-2)^3. Parenthesised
/// subexpressions are accepted as an extension.
Element parse_element(std::string_view text, const FieldSpec& field);

}  // namespace ordens
