#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hopfmzv {

using Part = std::uint32_t;

/// A finite tuple of positive integers. The empty tuple is the unit 𝟏.
///
/// Compositions index the basis of both Hopf algebras. They are immutable
/// values with structural equality; weight is cached.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<Part> parts);
    /// Throws DomainError if some part is zero.
    explicit Composition(std::vector<Part> parts);

    static Composition unit() { return {}; }
    /// [1_k]
    static Composition ones(std::size_t k);

    std::span<const Part> parts() const noexcept { return parts_; }
    std::size_t depth() const noexcept { return parts_.size(); }
    unsigned weight() const noexcept { return weight_; }
    bool is_unit() const noexcept { return parts_.empty(); }

    Part operator[](std::size_t i) const { return parts_[i]; }
    Part front() const { return parts_.front(); }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    Composition concat(const Composition& other) const;
    Composition reversed() const;
    /// Drops the first `n` parts.
    Composition tail(std::size_t n = 1) const;
    /// Prepends a part.
    Composition prepend(Part first) const;
    /// Adds `by` to the part at zero-based `index`.
    Composition incremented(std::size_t index, Part by = 1) const;

    /// Canonical form "s1,s2,...,sk"; "" for the unit.
    std::string to_string() const;
    /// Bracketed form "[s1,...,sk]"; "1" for the unit (CLI literal syntax).
    std::string to_literal() const;
    /// Inverse of to_string(). Throws ParseError.
    static Composition parse_canonical(const std::string& text);

    friend bool operator==(const Composition& a, const Composition& b) noexcept {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<Part> parts_;
    unsigned weight_ = 0;
};

/// Compare two compositions of equal weight under the well-order on H_n:
/// a > b iff at the first differing position a has the smaller part.
/// Largest element of H_n is [1_n], smallest is [n].
/// Throws ComparisonError if the weights differ.
std::strong_ordering order_cmp(const Composition& a, const Composition& b);

/// Strict weak ordering across all weights: weight first, then order_cmp.
/// Every serialized container iterates in this order.
struct BasisLess {
    bool operator()(const Composition& a, const Composition& b) const noexcept;
};

/// Lexicographic BasisLess over same-rank tensor keys.
struct TensorKeyLess {
    bool operator()(const std::vector<Composition>& a,
                    const std::vector<Composition>& b) const noexcept;
};

struct CompositionHash {
    std::size_t operator()(const Composition& c) const noexcept;
};

/// All 2^{n-1} compositions of n (just 𝟏 for n = 0), ascending.
std::vector<Composition> enumerate_basis(unsigned n);

/// Every composition of weight 0..max_weight, ascending by BasisLess.
std::vector<Composition> compositions_up_to(unsigned max_weight);

/// Parts of all factors laid end to end; unit factors contribute nothing.
Composition concat_all(std::span<const Composition> factors);

/// Pre-order on tensors: u ≤ v iff concat(u) ≤ concat(v). Reflexive and
/// transitive, not antisymmetric. Throws ComparisonError on weight mismatch.
bool tensor_le(std::span<const Composition> u, std::span<const Composition> v);

/// Every composition obtained by summing runs of consecutive parts of `c`
/// (including `c`), ascending. 2^{depth-1} entries for depth ≥ 1.
std::vector<Composition> coarsenings(const Composition& c);

/// depth ≥ 1 and first part ≥ 2.
bool is_admissible(const Composition& c) noexcept;

enum class Letter : std::uint8_t { x0 = 0, x1 = 1 };
using Word = std::vector<Letter>;

/// x0^{s1-1} x1 ... x0^{sk-1} x1
Word encode_word(const Composition& c);
/// Inverse of encode_word. Throws DomainError unless `w` is empty or ends in x1.
Composition decode_word(const Word& w);
/// Space-separated letters, e.g. "x0 x1 x1"; "" for the empty word.
std::string to_string(const Word& w);

} // namespace hopfmzv

template <>
struct std::hash<hopfmzv::Composition> : hopfmzv::CompositionHash {};
