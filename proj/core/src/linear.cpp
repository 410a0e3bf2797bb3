#include "hopfmzv/linear.hpp"

#include "hopfmzv/errors.hpp"

#include "json.hpp"

#include <optional>

namespace hopfmzv {

using nlohmann::json;

Element::Element(const Composition& c, const Rational& coeff) { add_term(c, coeff); }

Rational Element::coefficient(const Composition& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Composition& c, const Rational& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

unsigned Element::max_weight() const noexcept {
    return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

bool Element::is_homogeneous() const noexcept {
    return terms_.empty() || terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

Element& Element::operator+=(const Element& other) {
    for (const auto& [c, q] : other.terms_)
        add_term(c, q);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    for (const auto& [c, q] : other.terms_)
        add_term(c, -q);
    return *this;
}

Element& Element::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, q] : terms_)
        q *= scalar;
    return *this;
}

TensorElement::TensorElement(std::size_t rank) : rank_(rank) {
    if (rank == 0)
        throw DomainError("tensor rank must be >= 1");
}

Rational TensorElement::coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Key& key, const Rational& coeff) {
    if (key.size() != rank_)
        throw DomainError("tensor key of rank " + std::to_string(key.size()) + " added to rank " +
                          std::to_string(rank_) + " tensor");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    for (const auto& [k, q] : other.terms_)
        add_term(k, q);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    for (const auto& [k, q] : other.terms_)
        add_term(k, -q);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, q] : terms_)
        q *= scalar;
    return *this;
}

TensorElement as_tensor(const Element& e) {
    TensorElement t(1);
    for (const auto& [c, q] : e)
        t.add_term({c}, q);
    return t;
}

Element graded_component(const Element& e, unsigned n) {
    Element out;
    for (const auto& [c, q] : e)
        if (c.weight() == n)
            out.add_term(c, q);
    return out;
}

TensorElement tensor_project(const TensorElement& t, const Composition& alpha) {
    if (t.rank() != alpha.depth())
        throw DomainError("tensor_project: rank " + std::to_string(t.rank()) + " does not match depth of " +
                          alpha.to_literal());
    TensorElement out(t.rank());
    for (const auto& [key, q] : t) {
        bool keep = true;
        for (std::size_t i = 0; i < key.size() && keep; ++i)
            keep = key[i].weight() == alpha[i];
        if (keep)
            out.add_term(key, q);
    }
    return out;
}

namespace {

// "c*X" with the sign handled by the caller.
std::string scaled_term(const Rational& magnitude, const std::string& literal) {
    if (magnitude == 1)
        return literal == "1" ? "1*1" : literal;
    return to_display_string(magnitude) + "*" + literal;
}

template <typename Terms, typename LiteralFn>
std::string join_terms(const Terms& terms, LiteralFn&& literal) {
    if (terms.empty())
        return "0*1";
    std::string s;
    bool first = true;
    for (const auto& [key, q] : terms) {
        const bool negative = q < 0;
        const Rational magnitude = abs(q);
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        s += scaled_term(magnitude, literal(key));
        first = false;
    }
    return s;
}

json comp_json(const Composition& c) {
    json parts = json::array();
    for (Part p : c)
        parts.push_back(p);
    return parts;
}

Composition comp_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError(0, "composition must be an integer array");
    std::vector<Part> parts;
    for (const auto& p : j) {
        if (!p.is_number_integer() || p.get<long long>() < 1)
            throw ParseError(0, "composition parts must be integers >= 1");
        parts.push_back(p.get<Part>());
    }
    return Composition(std::move(parts));
}

json parse_json_array(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array())
        throw ParseError(0, "expected a JSON array of terms");
    return j;
}

Rational coeff_from_json(const json& term) {
    if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string() || !term.contains("comp"))
        throw ParseError(0, "term must be an object with string \"coeff\" and \"comp\"");
    return parse_rational(term["coeff"].get<std::string>());
}

} // namespace

std::string to_string(const Element& e) {
    return join_terms(e.terms(), [](const Composition& c) { return c.to_literal(); });
}

std::string to_string(const TensorElement& t) {
    return join_terms(t.terms(), [](const TensorElement::Key& key) {
        std::string s;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i)
                s += "⊗";
            s += key[i].to_literal();
        }
        return key.size() > 1 ? "(" + s + ")" : s;
    });
}

std::string serialize(const Element& e) {
    json out = json::array();
    for (const auto& [c, q] : e)
        out.push_back({{"coeff", to_fraction_string(q)}, {"comp", comp_json(c)}});
    return out.dump();
}

std::string serialize(const TensorElement& t) {
    json out = json::array();
    for (const auto& [key, q] : t) {
        json factors = json::array();
        for (const auto& c : key)
            factors.push_back(comp_json(c));
        out.push_back({{"coeff", to_fraction_string(q)}, {"comp", factors}});
    }
    return out.dump();
}

Element parse_element_json(const std::string& text) {
    Element e;
    for (const auto& term : parse_json_array(text))
        e.add_term(comp_from_json(term["comp"]), coeff_from_json(term));
    return e;
}

TensorElement parse_tensor_json(const std::string& text) {
    const json j = parse_json_array(text);
    std::optional<TensorElement> t;
    for (const auto& term : j) {
        const Rational q = coeff_from_json(term);
        const json& factors = term["comp"];
        if (!factors.is_array() || factors.empty())
            throw ParseError(0, "tensor term \"comp\" must be a non-empty array of compositions");
        TensorElement::Key key;
        for (const auto& f : factors)
            key.push_back(comp_from_json(f));
        if (!t)
            t.emplace(key.size());
        if (key.size() != t->rank())
            throw ParseError(0, "tensor terms of mixed rank");
        t->add_term(key, q);
    }
    if (!t)
        throw ParseError(0, "cannot infer the rank of an empty tensor");
    return *t;
}

} // namespace hopfmzv
