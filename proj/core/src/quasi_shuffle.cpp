#include "hopfmzv/quasi_shuffle.hpp"

#include "memo.hpp"

#include <map>
#include <utility>

namespace hopfmzv {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Composition, Composition>& p) const noexcept {
        const std::size_t h1 = CompositionHash{}(p.first);
        return h1 ^ (CompositionHash{}(p.second) + 0x9e3779b97f4a7c15ull + (h1 << 6) + (h1 >> 2));
    }
};

detail::Memo<std::pair<Composition, Composition>, Element, PairHash>& stuffle_memo() {
    static detail::Memo<std::pair<Composition, Composition>, Element, PairHash> memo;
    return memo;
}

Element prepend_all(Part first, const Element& e) {
    Element out;
    for (const auto& [c, q] : e)
        out.add_term(c.prepend(first), q);
    return out;
}

// Suffix recursion a[i:] ∗ b[j:], memoized on (i, j).
class StuffleTable {
public:
    StuffleTable(const Composition& a, const Composition& b) : a_(a), b_(b) {}

    const Element& at(std::size_t i, std::size_t j) {
        auto key = std::pair{i, j};
        if (auto it = table_.find(key); it != table_.end())
            return it->second;
        Element value;
        if (i == a_.depth())
            value = Element(b_.tail(j));
        else if (j == b_.depth())
            value = Element(a_.tail(i));
        else {
            value += prepend_all(a_[i], at(i + 1, j));
            value += prepend_all(b_[j], at(i, j + 1));
            value += prepend_all(a_[i] + b_[j], at(i + 1, j + 1));
        }
        return table_.emplace(key, std::move(value)).first->second;
    }

private:
    const Composition& a_;
    const Composition& b_;
    std::map<std::pair<std::size_t, std::size_t>, Element> table_;
};

} // namespace

Element stuffle(const Composition& a, const Composition& b) {
    if (a.is_unit())
        return Element(b);
    if (b.is_unit())
        return Element(a);
    auto key = BasisLess{}(b, a) ? std::pair{b, a} : std::pair{a, b};
    return *stuffle_memo().get(key, [&] { return StuffleTable(key.first, key.second).at(0, 0); });
}

Element stuffle(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ca, qa] : a)
        for (const auto& [cb, qb] : b)
            out += stuffle(ca, cb) * (qa * qb);
    return out;
}

TensorElement coproduct_dec(const Composition& c) {
    TensorElement t(2);
    const auto parts = c.parts();
    for (std::size_t split = 0; split <= c.depth(); ++split)
        t.add_term({Composition(std::vector<Part>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(split))),
                    c.tail(split)},
                   1);
    return t;
}

TensorElement coproduct_dec(const Element& e) {
    TensorElement out(2);
    for (const auto& [c, q] : e) {
        TensorElement t = coproduct_dec(c);
        t *= q;
        out += t;
    }
    return out;
}

Rational counit_dec(const Element& e) { return e.coefficient(Composition::unit()); }

Element antipode_qsh(const Composition& c) {
    Element out;
    const Rational sign = c.depth() % 2 == 0 ? 1 : -1;
    for (const auto& beta : coarsenings(c.reversed()))
        out.add_term(beta, sign);
    return out;
}

Element antipode_qsh(const Element& e) {
    return apply_linear(e, [](const Composition& c) { return antipode_qsh(c); });
}

Rational zeta_q_prime(const Element& e) {
    Rational total = 0;
    for (const auto& [c, q] : e)
        if (c.depth() <= 1)
            total += q;
    return total;
}

} // namespace hopfmzv
