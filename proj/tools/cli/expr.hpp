#pragma once

#include "hopfmzv/composition.hpp"
#include "hopfmzv/linear.hpp"
#include "hopfmzv/rational.hpp"

#include <cstddef>
#include <memory>
#include <string_view>
#include <variant>

namespace hopfmzv::cli {

// Grammar (whitespace-insensitive):
//   expr    := ["-"] term (("+" | "-") term)*
//   term    := factor (("sh" | "st") factor)*
//   factor  := rational "*" factor | "(" expr ")" | literal
//   literal := "[" int ("," int)* "]" | "1"
//   rational:= int ("/" int)?
// The bare token 1 is the unit 𝟏; the scalar 1 only appears before "*" or
// inside a fraction.

struct Node;
using NodePtr = std::unique_ptr<const Node>;

enum class BinaryOp { add, subtract, shuffle, stuffle };

struct CompositionLiteral {
    Composition value;
};
struct UnitLiteral {};
struct Negate {
    NodePtr operand;
};
struct Scaled {
    Rational scalar;
    NodePtr operand;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Group {
    NodePtr inner;
};

struct Node {
    std::variant<CompositionLiteral, UnitLiteral, Negate, Scaled, Binary, Group> value;
    /// Byte offset of the node's first token in the source.
    std::size_t position = 0;
};

class Expression {
public:
    explicit Expression(NodePtr root) : root_(std::move(root)) {}
    const Node& root() const { return *root_; }

private:
    NodePtr root_;
};

/// Throws ParseError (with byte position) on syntax errors, zero
/// denominators, and parts < 1.
Expression parse_expr(std::string_view source);

Element evaluate(const Expression& expr);
Element evaluate(std::string_view source);

} // namespace hopfmzv::cli
