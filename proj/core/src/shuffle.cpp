#include "hopfmzv/shuffle.hpp"

#include "hopfmzv/errors.hpp"
#include "memo.hpp"

#include <algorithm>
#include <utility>

namespace hopfmzv {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Composition, Composition>& p) const noexcept {
        const std::size_t h1 = CompositionHash{}(p.first);
        const std::size_t h2 = CompositionHash{}(p.second);
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ull + (h1 << 6) + (h1 >> 2));
    }
};

using PairMemo = detail::Memo<std::pair<Composition, Composition>, Element, PairHash>;

PairMemo& shuffle_memo() {
    static PairMemo memo;
    return memo;
}

detail::Memo<Composition, TensorElement, CompositionHash>& coproduct_memo() {
    static detail::Memo<Composition, TensorElement, CompositionHash> memo;
    return memo;
}

detail::Memo<Composition, Element, CompositionHash>& antipode_memo() {
    static detail::Memo<Composition, Element, CompositionHash> memo;
    return memo;
}

using BasisOperator = Element (*)(int, const Composition&);

TensorElement lift(BasisOperator op, int i, const TensorElement& t) {
    if (t.rank() != 2)
        throw DomainError("lifted operators act on rank-2 tensors");
    TensorElement out(2);
    for (const auto& [key, q] : t) {
        const Composition& u = key[0];
        const Composition& v = key[1];
        for (const auto& [vv, c] : op(i - static_cast<int>(u.depth()), v))
            out.add_term({u, vv}, q * c);
        for (const auto& [uu, c] : op(i, u))
            out.add_term({uu, v}, q * c);
    }
    return out;
}

TensorElement compute_coproduct(const Composition& c) {
    const std::size_t k = c.depth();
    TensorElement t(2);
    for (std::size_t j = 0; j <= k; ++j)
        t.add_term({Composition::ones(j), Composition::ones(k - j)}, 1);
    Integer denominator = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const Part s = c[i - 1];
        for (Part r = 1; r < s; ++r)
            t = lifted_p(static_cast<int>(i), t);
        denominator *= factorial(s - 1);
    }
    if (denominator != 1)
        t *= Rational(1, denominator);
    return t;
}

} // namespace

std::map<Word, std::uint64_t> word_shuffle(const Word& a, const Word& b) {
    // row[j] holds a[i:] ⧢ b[j:] for the current i; words are built reversed
    // (appending the next letter) and flipped at the end.
    using Table = std::map<Word, std::uint64_t>;
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    auto prefixed = [](const Table& src, Letter l, Table& dst) {
        for (const auto& [w, count] : src) {
            Word x = w;
            x.push_back(l);
            dst[x] += count;
        }
    };
    std::vector<Table> next(m + 1);
    // i = n: only b[j:] remains.
    for (std::size_t j = m + 1; j-- > 0;) {
        Word w(b.rbegin(), b.rend() - static_cast<std::ptrdiff_t>(j));
        next[j] = Table{{w, 1}};
    }
    for (std::size_t i = n; i-- > 0;) {
        std::vector<Table> row(m + 1);
        for (std::size_t j = m + 1; j-- > 0;) {
            prefixed(next[j], a[i], row[j]);
            if (j < m)
                prefixed(row[j + 1], b[j], row[j]);
        }
        next = std::move(row);
    }
    Table out;
    for (const auto& [w, count] : next[0])
        out.emplace(Word(w.rbegin(), w.rend()), count);
    return out;
}

Element shuffle(const Composition& a, const Composition& b) {
    if (a.is_unit())
        return Element(b);
    if (b.is_unit())
        return Element(a);
    auto key = BasisLess{}(b, a) ? std::pair{b, a} : std::pair{a, b};
    return *shuffle_memo().get(key, [&] {
        Element out;
        for (const auto& [w, count] : word_shuffle(encode_word(key.first), encode_word(key.second)))
            out.add_term(decode_word(w), Rational(static_cast<unsigned long>(count)));
        return out;
    });
}

Element shuffle(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ca, qa] : a)
        for (const auto& [cb, qb] : b)
            out += shuffle(ca, cb) * (qa * qb);
    return out;
}

Element rota_baxter_I(const Element& e) {
    Element out;
    for (const auto& [c, q] : e) {
        if (c.is_unit())
            throw DomainError("I is defined only on compositions of depth >= 1");
        out.add_term(c.incremented(0), q);
    }
    return out;
}

Element delta(int i, const Composition& c) {
    Element out;
    if (i < 1 || static_cast<std::size_t>(i) > c.depth())
        return out;
    for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j)
        out.add_term(c.incremented(j), c[j]);
    return out;
}

Element delta(int i, const Element& e) {
    return apply_linear(e, [i](const Composition& c) { return delta(i, c); });
}

Element p(int i, const Composition& c) {
    const int k = static_cast<int>(c.depth());
    if (i >= 1 && i <= k)
        return Element(c.incremented(static_cast<std::size_t>(i - 1)), c[static_cast<std::size_t>(i - 1)]);
    if (i == k + 1)
        return -delta(k, c);
    return {};
}

Element p(int i, const Element& e) {
    return apply_linear(e, [i](const Composition& c) { return p(i, c); });
}

TensorElement lifted_p(int i, const TensorElement& t) {
    return lift(static_cast<BasisOperator>(&p), i, t);
}

TensorElement lifted_delta(int i, const TensorElement& t) {
    return lift(static_cast<BasisOperator>(&delta), i, t);
}

TensorElement coproduct_sh(const Composition& c) {
    return *coproduct_memo().get(c, [&] { return compute_coproduct(c); });
}

TensorElement coproduct_sh(const Element& e) {
    TensorElement out(2);
    for (const auto& [c, q] : e) {
        TensorElement t = coproduct_sh(c);
        t *= q;
        out += t;
    }
    return out;
}

TensorElement reduced_coproduct_sh(const Composition& c) {
    TensorElement out(2);
    for (const auto& [key, q] : coproduct_sh(c))
        if (!key[0].is_unit() && !key[1].is_unit())
            out.add_term(key, q);
    return out;
}

TensorElement iterated_coproduct_sh(std::size_t m, const Element& e) {
    if (m == 0)
        throw DomainError("iterated coproduct needs m >= 1");
    TensorElement t = as_tensor(e);
    for (std::size_t r = 1; r < m; ++r) {
        TensorElement next(r + 1);
        for (const auto& [key, q] : t) {
            for (const auto& [split, c] : coproduct_sh(key.front())) {
                TensorElement::Key k;
                k.reserve(key.size() + 1);
                k.push_back(split[0]);
                k.push_back(split[1]);
                k.insert(k.end(), key.begin() + 1, key.end());
                next.add_term(k, q * c);
            }
        }
        t = std::move(next);
    }
    return t;
}

Rational counit_sh(const Element& e) { return e.coefficient(Composition::unit()); }

Element antipode_sh(const Composition& c) {
    if (c.is_unit())
        return Element::unit();
    return *antipode_memo().get(c, [&] {
        Element out(c, -1);
        for (const auto& [key, q] : reduced_coproduct_sh(c))
            out -= shuffle(antipode_sh(key[0]), Element(key[1])) * q;
        return out;
    });
}

Element antipode_sh(const Element& e) {
    return apply_linear(e, [](const Composition& c) { return antipode_sh(c); });
}

} // namespace hopfmzv
