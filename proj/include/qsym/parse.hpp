#pragma once

#include "qsym/multi.hpp"

#include <variant>

namespace qsym {

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  size_t pos;
};

/// Result of evaluating an input expression: a scalar, an element of the
/// torus algebra, or an element of the multitorus algebra.
using Value = std::variant<Cyclo, TorusElement, MultiElement>;

/// Grammar: sum of terms; term = factor (* factor)*; factors are rationals,
/// zeta(N)^k, x1..xn (postfix * glued to the atom means star), x^[r,...],
/// u[i,k], p[[one-line]], m[sigma=[...],r=[...]], or parenthesized
/// subexpressions.
Value parse_element(const std::string& text, ContextPtr ctx);

std::string value_str(const Value& v);

}  // namespace qsym
