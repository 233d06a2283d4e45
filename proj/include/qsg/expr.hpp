#pragma once

#include "qsg/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsg {

/// Syntax tree of an algebraic expression.
///
/// Grammar (ASCII):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/' | <juxtaposition>) unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
/// Products are noncommutative and left-associative; '/' only accepts a
/// divisor that evaluates to a nonzero h-free scalar.
struct Expr {
    enum class Kind { Number, Symbol, Negate, Sum, Product, Quotient, Power, Group };

    Kind kind = Kind::Number;
    std::string text;            // Number digits or Symbol name
    unsigned exponent = 0;       // Power
    std::vector<Expr> children;  // operands
    std::vector<bool> subtract;  // Sum: true when child i follows '-'
    std::size_t position = 0;    // 1-based column of the first token

    friend bool operator==(const Expr&, const Expr&) = default;
};

Expr parse_expression(std::string_view input);

/// Canonical text for a tree; parse_expression(print(e)) reproduces e.
std::string print(const Expr& e);

/// Resolves identifiers during evaluation.
struct SymbolResolver {
    TablePtr table;
    std::function<std::optional<Element>(std::string_view)> lookup;
    /// Candidate names for "did you mean" suggestions.
    std::vector<std::string> known;
};

/// Evaluates in the free graded algebra (no rewriting). Unknown identifiers
/// raise ParseError with the closest known name as a suggestion.
Element evaluate(const Expr& e, const SymbolResolver& resolver);

/// Parses "lhs = rhs" (or a bare expression) into lhs - rhs.
Element evaluate_relation(std::string_view text, const SymbolResolver& resolver);

/// Resolver over generator names plus h and q.
SymbolResolver generator_resolver(TablePtr table);

}  // namespace qsg
