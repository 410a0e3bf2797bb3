#include "cli/expr.hpp"

#include "hopfmzv/errors.hpp"
#include "hopfmzv/quasi_shuffle.hpp"
#include "hopfmzv/shuffle.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <string>

namespace hopfmzv::cli {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expression parse() {
        auto root = expr();
        skip_space();
        if (pos_ != src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return Expression(std::move(root));
    }

private:
    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
        throw ParseError(at, "parse error at position " + std::to_string(at) + ": " + message);
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    /// "sh" or "st" as a whole word.
    std::optional<BinaryOp> product_keyword() {
        skip_space();
        if (pos_ + 2 > src_.size() || src_[pos_] != 's')
            return std::nullopt;
        const char second = src_[pos_ + 1];
        if (second != 'h' && second != 't')
            return std::nullopt;
        if (pos_ + 2 < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_ + 2])))
            return std::nullopt;
        pos_ += 2;
        return second == 'h' ? BinaryOp::shuffle : BinaryOp::stuffle;
    }

    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return std::string(src_.substr(start, pos_ - start));
    }

    static NodePtr make(std::size_t at, auto value) {
        return std::make_unique<const Node>(Node{std::move(value), at});
    }

    NodePtr expr() {
        skip_space();
        const std::size_t start = pos_;
        NodePtr lhs;
        if (accept('-'))
            lhs = make(start, Negate{term()});
        else
            lhs = term();
        while (true) {
            if (accept('+'))
                lhs = make(start, Binary{BinaryOp::add, std::move(lhs), term()});
            else if (accept('-'))
                lhs = make(start, Binary{BinaryOp::subtract, std::move(lhs), term()});
            else
                break;
        }
        return lhs;
    }

    NodePtr term() {
        skip_space();
        const std::size_t start = pos_;
        NodePtr lhs = factor();
        while (auto op = product_keyword())
            lhs = make(start, Binary{*op, std::move(lhs), factor()});
        return lhs;
    }

    NodePtr factor() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ == src_.size())
            fail("unexpected end of input");
        if (accept('(')) {
            auto inner = expr();
            expect(')');
            return make(start, Group{std::move(inner)});
        }
        if (peek('['))
            return composition_literal();
        if (std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            const std::string num = digits();
            std::string text = num;
            if (accept('/')) {
                skip_space();
                const std::size_t den_at = pos_;
                const std::string den = digits();
                if (Integer(den) == 0)
                    fail_at(den_at, "zero denominator");
                text += "/" + den;
            }
            if (accept('*'))
                return make(start, Scaled{parse_rational(text), factor()});
            if (text == "1")
                return make(start, UnitLiteral{});
            fail_at(start, "a scalar must be followed by '*' (the bare token 1 is the unit)");
        }
        fail("expected '(', '[', a scalar, or 1");
    }

    NodePtr composition_literal() {
        skip_space();
        const std::size_t start = pos_;
        expect('[');
        std::vector<Part> parts;
        do {
            skip_space();
            const std::size_t at = pos_;
            const std::string text = digits();
            Integer value(text);
            if (value < 1)
                fail_at(at, "composition parts must be >= 1");
            if (value > std::numeric_limits<Part>::max())
                fail_at(at, "composition part too large");
            parts.push_back(static_cast<Part>(value.get_ui()));
        } while (accept(','));
        expect(']');
        return make(start, CompositionLiteral{Composition(std::move(parts))});
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

Element eval(const Node& node) {
    return std::visit(
        [](const auto& n) -> Element {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, CompositionLiteral>)
                return Element(n.value);
            else if constexpr (std::is_same_v<T, UnitLiteral>)
                return Element::unit();
            else if constexpr (std::is_same_v<T, Negate>)
                return -eval(*n.operand);
            else if constexpr (std::is_same_v<T, Scaled>)
                return eval(*n.operand) * n.scalar;
            else if constexpr (std::is_same_v<T, Group>)
                return eval(*n.inner);
            else {
                const Element lhs = eval(*n.lhs);
                const Element rhs = eval(*n.rhs);
                switch (n.op) {
                case BinaryOp::add: return lhs + rhs;
                case BinaryOp::subtract: return lhs - rhs;
                case BinaryOp::shuffle: return shuffle(lhs, rhs);
                case BinaryOp::stuffle: return stuffle(lhs, rhs);
                }
                return {};
            }
        },
        node.value);
}

} // namespace

Expression parse_expr(std::string_view source) { return Parser(source).parse(); }

Element evaluate(const Expression& expr) { return eval(expr.root()); }

Element evaluate(std::string_view source) { return evaluate(parse_expr(source)); }

} // namespace hopfmzv::cli
