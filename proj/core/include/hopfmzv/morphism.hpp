#pragma once

#include "hopfmzv/composition.hpp"
#include "hopfmzv/linear.hpp"
#include "hopfmzv/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfmzv {

/// A character on the shuffle algebra, stored as a finite value table on
/// every composition of weight ≤ max_weight.
class Character {
public:
    using ValueMap = std::map<Composition, Rational, BasisLess>;

    /// Throws CharacterError if a composition of weight ≤ max_weight is
    /// missing from `values` or the unit does not map to 1. A missing unit
    /// is filled in with 1. Multiplicativity is not checked here; see
    /// char_validate().
    Character(std::string label, unsigned max_weight, ValueMap values);

    const std::string& label() const noexcept { return label_; }
    unsigned max_weight() const noexcept { return max_weight_; }
    const ValueMap& values() const noexcept { return values_; }

    /// Throws CoverageError beyond max_weight.
    const Rational& value(const Composition& c) const;
    /// Linear extension.
    Rational operator()(const Element& e) const;

private:
    std::string label_;
    unsigned max_weight_;
    ValueMap values_;
};

/// χ̄([s]) = 1/|s|!.
Character char_factorial(unsigned max_weight = 12);

struct CharacterValidation {
    bool valid = true;
    /// First pair (a, b) in ascending order with χ(a⧢b) ≠ χ(a)χ(b).
    std::optional<std::pair<Composition, Composition>> violation;
    std::string message;

    explicit operator bool() const noexcept { return valid; }
};

/// χ(𝟏) = 1 and χ(a⧢b) = χ(a)χ(b) for all basis pairs with |a|+|b| ≤ max_weight.
CharacterValidation char_validate(const Character& chi);

/// (χ^{⊗m} ∘ π_α ∘ Δ≥1^{(m−1)})(e), m = depth(α) ≥ 1.
Rational chi_alpha(const Character& chi, const Composition& alpha, const Element& e);

/// Matrix of Ψ_χ on QH_n in the ascending basis:
/// entries[row][col] = coefficient of basis[row] in Ψ(basis[col]).
struct GradedMatrix {
    unsigned weight = 0;
    std::vector<Composition> basis;
    std::vector<std::vector<Rational>> entries;

    std::size_t dimension() const noexcept { return basis.size(); }
    bool is_upper_triangular() const;
    std::vector<Rational> diagonal() const;

    /// Header row = basis in canonical form, then one row of fraction strings
    /// per basis element.
    std::string to_csv() const;
    /// Aligned, human-readable table.
    std::string to_table() const;
};

/// Ψ_χ together with caches of its basis images and graded matrices. The
/// caches are internally synchronized; instances may be shared across threads.
class InducedMorphism {
public:
    explicit InducedMorphism(Character chi);
    ~InducedMorphism();
    InducedMorphism(InducedMorphism&&) noexcept;
    InducedMorphism& operator=(InducedMorphism&&) noexcept;

    const Character& character() const noexcept { return chi_; }

    /// Ψ_χ by the recursion over reduced coproducts.
    Element apply(const Element& e) const;
    Element apply(const Composition& c) const;

    /// Ψ_χ by the definition Σ_α χ_α([s]) [α]; slow, kept as the oracle.
    Element apply_definitional(const Element& e) const;

    GradedMatrix matrix(unsigned n) const;

    /// x with Ψ_χ(x) = e, by back-substitution per weight. Throws
    /// SingularityError naming the smallest s with χ([s]) = 0.
    Element inverse_apply(const Element& e) const;

private:
    struct Cache;
    Character chi_;
    std::unique_ptr<Cache> cache_;
};

Element psi_apply(const Character& chi, const Element& e);
Element psi_apply_fast(const Character& chi, const Element& e);
GradedMatrix psi_matrix(const Character& chi, unsigned n);
Element psi_inverse_apply(const Character& chi, const Element& e);

/// Character file: JSON {"label": str, "max_weight": int,
/// "values": {"s1,...,sk": "p/q", ...}}. Ingestion validates and throws
/// CharacterError with the violating pair.
Character parse_character(const std::string& text);
Character load_character(const std::string& path);
std::string serialize(const Character& chi);

} // namespace hopfmzv
