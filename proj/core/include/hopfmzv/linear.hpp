#pragma once

#include "hopfmzv/composition.hpp"
#include "hopfmzv/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hopfmzv {

/// Finite Q-linear combination of compositions. Zero coefficients are never
/// stored; iteration is weight-major, then ascending in the well-order.
class Element {
public:
    using TermMap = std::map<Composition, Rational, BasisLess>;

    Element() = default;
    Element(const Composition& c, const Rational& coeff = 1);

    static Element unit() { return Element(Composition::unit()); }

    const TermMap& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Composition& c) const;
    void add_term(const Composition& c, const Rational& coeff);

    /// Largest weight among the terms; 0 for the zero element.
    unsigned max_weight() const noexcept;
    bool is_homogeneous() const noexcept;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& scalar);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend Element operator-(Element a) { return a *= -1; }
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

/// Finite combination of rank-m tuples of compositions (factors may be 𝟏).
class TensorElement {
public:
    using Key = std::vector<Composition>;
    using TermMap = std::map<Key, Rational, TensorKeyLess>;

    explicit TensorElement(std::size_t rank);

    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Key& key) const;
    /// Throws DomainError if key.size() != rank().
    void add_term(const Key& key, const Rational& coeff);

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Rational& scalar);

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    std::size_t rank_;
    TermMap terms_;
};

/// Rank-1 tensor with the same terms.
TensorElement as_tensor(const Element& e);

/// Terms of weight exactly n.
Element graded_component(const Element& e, unsigned n);

/// Keeps tensor terms whose i-th factor has weight alpha[i] for every i.
/// Throws DomainError if t.rank() != alpha.depth().
TensorElement tensor_project(const TensorElement& t, const Composition& alpha);

/// Extends a basis map linearly: Σ c_i [s_i] ↦ Σ c_i f([s_i]).
template <typename BasisMap>
Element apply_linear(const Element& e, BasisMap&& f) {
    Element out;
    for (const auto& [comp, coeff] : e)
        out += f(comp) * coeff;
    return out;
}

/// Rank-2 "componentwise product": (a⊗b)·(c⊗d) = (a·c)⊗(b·d) for a
/// bilinear basis product `mul`.
template <typename Product>
TensorElement tensor_multiply(const TensorElement& lhs, const TensorElement& rhs, Product&& mul) {
    TensorElement out(lhs.rank());
    for (const auto& [lk, lc] : lhs) {
        for (const auto& [rk, rc] : rhs) {
            std::vector<Element> factors;
            factors.reserve(lk.size());
            for (std::size_t i = 0; i < lk.size(); ++i)
                factors.push_back(mul(lk[i], rk[i]));
            // expand the tensor product of the factor elements
            std::vector<std::pair<TensorElement::Key, Rational>> partial{{{}, lc * rc}};
            for (const auto& f : factors) {
                std::vector<std::pair<TensorElement::Key, Rational>> next;
                for (const auto& [key, c] : partial)
                    for (const auto& [comp, fc] : f) {
                        auto k = key;
                        k.push_back(comp);
                        next.emplace_back(std::move(k), c * fc);
                    }
                partial = std::move(next);
            }
            for (const auto& [key, c] : partial)
                out.add_term(key, c);
        }
    }
    return out;
}

/// Human-readable sum, re-parsable by the expression grammar:
/// "1/2*[2] + [1,1]", "-[2]", "3*1", "0*1" for zero.
std::string to_string(const Element& e);
std::string to_string(const TensorElement& t);

/// JSON wire form: [{"coeff":"p/q","comp":[..]}, ...], serialized order.
std::string serialize(const Element& e);
/// JSON wire form: [{"coeff":"p/q","comp":[[..],[..]]}, ...].
std::string serialize(const TensorElement& t);

/// Inverse of serialize(). Throws ParseError.
Element parse_element_json(const std::string& text);
TensorElement parse_tensor_json(const std::string& text);

} // namespace hopfmzv
