#include "hopfmzv/morphism.hpp"

#include "hopfmzv/errors.hpp"
#include "hopfmzv/shuffle.hpp"
#include "memo.hpp"

#include <algorithm>
#include <iomanip>
#include <mutex>
#include <sstream>

namespace hopfmzv {

Character::Character(std::string label, unsigned max_weight, ValueMap values)
    : label_(std::move(label)), max_weight_(max_weight), values_(std::move(values)) {
    values_.try_emplace(Composition::unit(), 1);
    if (values_.at(Composition::unit()) != 1)
        throw CharacterError("character \"" + label_ + "\": value at the unit must be 1");
    for (const auto& [c, q] : values_)
        if (c.weight() > max_weight_)
            throw CharacterError("character \"" + label_ + "\": value for " + c.to_literal() +
                                 " exceeds max_weight " + std::to_string(max_weight_));
    for (const auto& c : compositions_up_to(max_weight_))
        if (!values_.contains(c))
            throw CharacterError("character \"" + label_ + "\": missing value for " + c.to_literal());
}

const Rational& Character::value(const Composition& c) const {
    if (c.weight() > max_weight_)
        throw CoverageError("character \"" + label_ + "\" is defined up to weight " + std::to_string(max_weight_) +
                            ", requested " + c.to_literal());
    return values_.at(c);
}

Rational Character::operator()(const Element& e) const {
    Rational total = 0;
    for (const auto& [c, q] : e)
        total += q * value(c);
    return total;
}

Character char_factorial(unsigned max_weight) {
    Character::ValueMap values;
    for (unsigned n = 0; n <= max_weight; ++n) {
        const Rational v(Integer(1), factorial(n));
        for (auto& c : enumerate_basis(n))
            values.emplace(std::move(c), v);
    }
    return Character("factorial", max_weight, std::move(values));
}

CharacterValidation char_validate(const Character& chi) {
    CharacterValidation result;
    if (chi.value(Composition::unit()) != 1) {
        result.valid = false;
        result.message = "value at the unit is not 1";
        return result;
    }
    const auto basis = compositions_up_to(chi.max_weight());
    for (std::size_t i = 1; i < basis.size(); ++i) {
        const Composition& a = basis[i];
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Composition& b = basis[j];
            if (a.weight() + b.weight() > chi.max_weight())
                break;
            // Straight from the word shuffle: the composition-level memo is
            // not worth populating for a one-off sweep.
            Rational lhs = 0;
            for (const auto& [w, count] : word_shuffle(encode_word(a), encode_word(b)))
                lhs += Rational(static_cast<unsigned long>(count)) * chi.value(decode_word(w));
            if (lhs != chi.value(a) * chi.value(b)) {
                result.valid = false;
                result.violation = std::pair{a, b};
                result.message = "chi(" + a.to_literal() + " sh " + b.to_literal() + ") = " + to_display_string(lhs) +
                                 " but chi(" + a.to_literal() + ")*chi(" + b.to_literal() +
                                 ") = " + to_display_string(Rational(chi.value(a) * chi.value(b)));
                return result;
            }
        }
    }
    return result;
}

namespace {

// (χ^{⊗m} ∘ π_α)(t)
Rational evaluate_projected(const Character& chi, const TensorElement& t, const Composition& alpha) {
    Rational total = 0;
    for (const auto& [key, q] : tensor_project(t, alpha)) {
        Rational term = q;
        for (const auto& factor : key)
            term *= chi.value(factor);
        total += term;
    }
    return total;
}

void require_coverage(const Character& chi, unsigned weight) {
    if (weight > chi.max_weight())
        throw CoverageError("character \"" + chi.label() + "\" is defined up to weight " +
                            std::to_string(chi.max_weight()) + ", requested weight " + std::to_string(weight));
}

std::string fraction_cell(const Rational& q) { return to_fraction_string(q); }

} // namespace

Rational chi_alpha(const Character& chi, const Composition& alpha, const Element& e) {
    if (alpha.is_unit())
        throw DomainError("chi_alpha needs a composition of depth >= 1");
    require_coverage(chi, alpha.weight());
    return evaluate_projected(chi, iterated_coproduct_sh(alpha.depth(), e), alpha);
}

bool GradedMatrix::is_upper_triangular() const {
    for (std::size_t r = 0; r < entries.size(); ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (entries[r][c] != 0)
                return false;
    return true;
}

std::vector<Rational> GradedMatrix::diagonal() const {
    std::vector<Rational> d;
    d.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        d.push_back(entries[i][i]);
    return d;
}

std::string GradedMatrix::to_csv() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < basis.size(); ++c)
        out << (c ? "," : "") << '"' << basis[c].to_literal() << '"';
    out << '\n';
    for (const auto& row : entries) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << fraction_cell(row[c]);
        out << '\n';
    }
    return out.str();
}

std::string GradedMatrix::to_table() const {
    std::vector<std::string> labels;
    std::size_t label_width = 0;
    for (const auto& b : basis) {
        labels.push_back(b.to_literal());
        label_width = std::max(label_width, labels.back().size());
    }
    std::vector<std::size_t> widths(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        widths[c] = labels[c].size();
        for (const auto& row : entries)
            widths[c] = std::max(widths[c], to_display_string(row[c]).size());
    }
    std::ostringstream out;
    out << "weight " << weight << ", dimension " << basis.size() << '\n';
    out << std::setw(static_cast<int>(label_width)) << "";
    for (std::size_t c = 0; c < basis.size(); ++c)
        out << "  " << std::setw(static_cast<int>(widths[c])) << labels[c];
    out << '\n';
    for (std::size_t r = 0; r < entries.size(); ++r) {
        out << std::setw(static_cast<int>(label_width)) << labels[r];
        for (std::size_t c = 0; c < basis.size(); ++c)
            out << "  " << std::setw(static_cast<int>(widths[c])) << to_display_string(entries[r][c]);
        out << '\n';
    }
    return out.str();
}

struct InducedMorphism::Cache {
    detail::Memo<Composition, Element, CompositionHash> images;
    std::mutex matrix_mutex;
    std::map<unsigned, std::shared_ptr<const GradedMatrix>> matrices;
};

InducedMorphism::InducedMorphism(Character chi) : chi_(std::move(chi)), cache_(std::make_unique<Cache>()) {}
InducedMorphism::~InducedMorphism() = default;
InducedMorphism::InducedMorphism(InducedMorphism&&) noexcept = default;
InducedMorphism& InducedMorphism::operator=(InducedMorphism&&) noexcept = default;

Element InducedMorphism::apply(const Composition& c) const {
    if (c.is_unit())
        return Element::unit();
    require_coverage(chi_, c.weight());
    return *cache_->images.get(c, [&] {
        // Ψ(x) = χ(x)[|x|] + Σ_{x′⊗x″ ∈ Δ̄x} χ(x′) [|x′|, Ψ(x″)]
        Element out(Composition{c.weight()}, chi_.value(c));
        for (const auto& [key, q] : reduced_coproduct_sh(c)) {
            const Rational scale = q * chi_.value(key[0]);
            if (scale == 0)
                continue;
            const Part head = key[0].weight();
            for (const auto& [tail, r] : apply(key[1]))
                out.add_term(tail.prepend(head), scale * r);
        }
        return out;
    });
}

Element InducedMorphism::apply(const Element& e) const {
    return apply_linear(e, [this](const Composition& c) { return apply(c); });
}

Element InducedMorphism::apply_definitional(const Element& e) const {
    Element out;
    for (unsigned n = 0; n <= e.max_weight(); ++n) {
        const Element component = graded_component(e, n);
        if (component.is_zero())
            continue;
        if (n == 0) {
            out += component;
            continue;
        }
        require_coverage(chi_, n);
        const auto alphas = enumerate_basis(n);
        for (std::size_t m = 1; m <= n; ++m) {
            const TensorElement iterated = iterated_coproduct_sh(m, component);
            for (const auto& alpha : alphas)
                if (alpha.depth() == m)
                    out.add_term(alpha, evaluate_projected(chi_, iterated, alpha));
        }
    }
    return out;
}

GradedMatrix InducedMorphism::matrix(unsigned n) const {
    require_coverage(chi_, n);
    {
        std::lock_guard lock(cache_->matrix_mutex);
        if (auto it = cache_->matrices.find(n); it != cache_->matrices.end())
            return *it->second;
    }
    GradedMatrix m;
    m.weight = n;
    m.basis = enumerate_basis(n);
    std::map<Composition, std::size_t, BasisLess> index;
    for (std::size_t i = 0; i < m.basis.size(); ++i)
        index.emplace(m.basis[i], i);
    m.entries.assign(m.basis.size(), std::vector<Rational>(m.basis.size()));
    for (std::size_t col = 0; col < m.basis.size(); ++col)
        for (const auto& [c, q] : apply(m.basis[col]))
            m.entries[index.at(c)][col] = q;
    std::lock_guard lock(cache_->matrix_mutex);
    cache_->matrices.try_emplace(n, std::make_shared<const GradedMatrix>(m));
    return m;
}

Element InducedMorphism::inverse_apply(const Element& e) const {
    Element out;
    for (unsigned n = 0; n <= e.max_weight(); ++n) {
        const Element component = graded_component(e, n);
        if (component.is_zero())
            continue;
        if (n == 0) {
            out += component;
            continue;
        }
        require_coverage(chi_, n);
        for (Part s = 1; s <= n; ++s)
            if (chi_.value(Composition{s}) == 0)
                throw SingularityError(s, "Psi_chi is singular: chi([" + std::to_string(s) + "]) = 0");
        const GradedMatrix m = matrix(n);
        const std::size_t dim = m.dimension();
        std::vector<Rational> rhs(dim);
        for (std::size_t i = 0; i < dim; ++i)
            rhs[i] = component.coefficient(m.basis[i]);
        std::vector<Rational> x(dim);
        for (std::size_t r = dim; r-- > 0;) {
            Rational acc = rhs[r];
            for (std::size_t c = r + 1; c < dim; ++c)
                if (x[c] != 0 && m.entries[r][c] != 0)
                    acc -= m.entries[r][c] * x[c];
            x[r] = acc / m.entries[r][r];
        }
        for (std::size_t i = 0; i < dim; ++i)
            out.add_term(m.basis[i], x[i]);
    }
    return out;
}

Element psi_apply(const Character& chi, const Element& e) { return InducedMorphism(chi).apply_definitional(e); }

Element psi_apply_fast(const Character& chi, const Element& e) { return InducedMorphism(chi).apply(e); }

GradedMatrix psi_matrix(const Character& chi, unsigned n) { return InducedMorphism(chi).matrix(n); }

Element psi_inverse_apply(const Character& chi, const Element& e) { return InducedMorphism(chi).inverse_apply(e); }

} // namespace hopfmzv
