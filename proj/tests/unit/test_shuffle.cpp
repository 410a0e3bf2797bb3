#include "hopfmzv/errors.hpp"
#include "hopfmzv/rational.hpp"
#include "hopfmzv/shuffle.hpp"
#include "support/random.hpp"

#include "doctest.h"

using namespace hopfmzv;
using C = Composition;

namespace {

TensorElement tensor(std::initializer_list<std::pair<std::vector<C>, Rational>> terms) {
    TensorElement t(terms.begin()->first.size());
    for (const auto& [key, c] : terms)
        t.add_term(key, c);
    return t;
}

// Oracle: choose which |a|+|b| positions hold the letters of a.
Element interleavings(const C& a, const C& b) {
    const Word wa = encode_word(a), wb = encode_word(b);
    const std::size_t n = wa.size() + wb.size();
    Element out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != wa.size())
            continue;
        Word w;
        std::size_t ia = 0, ib = 0;
        for (std::size_t pos = 0; pos < n; ++pos)
            w.push_back((mask >> pos) & 1u ? wa[ia++] : wb[ib++]);
        out.add_term(decode_word(w), 1);
    }
    return out;
}

} // namespace

TEST_CASE("shuffle examples") {
    CHECK(shuffle(C{}, C{2, 1}) == Element(C{2, 1}));
    CHECK(shuffle(C{2, 1}, C{}) == Element(C{2, 1}));
    CHECK(shuffle(C{1}, C{1}) == Element(C{1, 1}, 2));
    CHECK(shuffle(C{2}, C{2}) == Element(C{3, 1}, 4) + Element(C{2, 2}, 2));
}

TEST_CASE("shuffle matches brute-force interleavings") {
    const auto comps = compositions_up_to(4);
    for (const auto& a : comps)
        for (const auto& b : comps)
            CHECK(shuffle(a, b) == interleavings(a, b));
}

TEST_CASE("shuffle is commutative, associative and bilinear") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = testing::random_element(rng, 3, 3);
        const auto b = testing::random_element(rng, 3, 3);
        const auto c = testing::random_element(rng, 2, 2);
        CHECK(shuffle(a, b) == shuffle(b, a));
        CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
        CHECK(shuffle(a + b, c) == shuffle(a, c) + shuffle(b, c));
    }
}

TEST_CASE("word_shuffle counts") {
    const Word x0x1{Letter::x0, Letter::x1};
    std::uint64_t total = 0;
    for (const auto& [w, count] : word_shuffle(x0x1, x0x1))
        total += count;
    CHECK(total == 6);
}

TEST_CASE("rota_baxter_I") {
    CHECK(rota_baxter_I(Element(C{1, 1})) == Element(C{2, 1}));
    CHECK(rota_baxter_I(Element(C{3})) == Element(C{4}));
    CHECK(rota_baxter_I(Element(C{1}, 2) - Element(C{2})) == Element(C{2}, 2) - Element(C{3}));
    CHECK_THROWS_AS(rota_baxter_I(Element::unit()), DomainError);
}

TEST_CASE("delta and p") {
    CHECK(delta(2, C{1, 1}) == Element(C{2, 1}) + Element(C{1, 2}));
    CHECK(delta(3, C{1, 1}).is_zero());
    CHECK(delta(1, C{}).is_zero());
    CHECK(p(1, C{2}) == Element(C{3}, 2));
    CHECK(p(2, C{1, 1}) == Element(C{1, 2}));
    CHECK(p(1, C{}).is_zero());
    CHECK(p(0, C{2}).is_zero());
    // p_{k+1} = -δ_k; zero beyond
    CHECK(p(2, C{2}) == Element(C{3}, -2));
    CHECK(p(3, C{1, 1}) == -(Element(C{2, 1}) + Element(C{1, 2})));
    CHECK(p(4, C{1, 1}).is_zero());
}

TEST_CASE("delta telescopes over p") {
    // δ_i = p_1 + ... + p_i for i ≤ depth, and the full sum up to p_{k+1} vanishes
    for (const auto& c : compositions_up_to(6)) {
        Element sum;
        for (int i = 1; i <= static_cast<int>(c.depth()); ++i) {
            sum += p(i, c);
            CHECK(sum == delta(i, c));
        }
        sum += p(static_cast<int>(c.depth()) + 1, c);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("coproduct_sh examples") {
    CHECK(coproduct_sh(C{}) == tensor({{{C{}, C{}}, 1}}));
    CHECK(coproduct_sh(C{1, 1}) ==
          tensor({{{C{}, C{1, 1}}, 1}, {{C{1}, C{1}}, 1}, {{C{1, 1}, C{}}, 1}}));
    CHECK(coproduct_sh(C{2}) == tensor({{{C{}, C{2}}, 1}, {{C{2}, C{}}, 1}}));
    CHECK(coproduct_sh(C{2, 1}) ==
          tensor({{{C{}, C{2, 1}}, 1}, {{C{2}, C{1}}, 1}, {{C{2, 1}, C{}}, 1}}));
    CHECK(coproduct_sh(C{1, 2}) ==
          tensor({{{C{}, C{1, 2}}, 1}, {{C{1}, C{2}}, 1}, {{C{2}, C{1}}, -1}, {{C{1, 2}, C{}}, 1}}));
}

TEST_CASE("coproduct_sh preserves weight and has primitive ends") {
    for (const auto& c : compositions_up_to(7)) {
        const auto t = coproduct_sh(c);
        for (const auto& [key, coeff] : t)
            CHECK(key[0].weight() + key[1].weight() == c.weight());
        CHECK(t.coefficient({C{}, c}) == 1);
        CHECK(t.coefficient({c, C{}}) == 1);
    }
}

TEST_CASE("depth-one compositions are primitive") {
    for (Part n = 1; n <= 10; ++n)
        CHECK(reduced_coproduct_sh(C{n}).is_zero());
}

TEST_CASE("iterated coproduct") {
    CHECK(iterated_coproduct_sh(1, Element(C{2})) == as_tensor(Element(C{2})));
    CHECK(iterated_coproduct_sh(2, Element(C{1, 1})) == coproduct_sh(C{1, 1}));
    CHECK(iterated_coproduct_sh(3, Element(C{1, 1})) ==
          tensor({{{C{}, C{}, C{1, 1}}, 1},
                  {{C{}, C{1}, C{1}}, 1},
                  {{C{1}, C{}, C{1}}, 1},
                  {{C{}, C{1, 1}, C{}}, 1},
                  {{C{1}, C{1}, C{}}, 1},
                  {{C{1, 1}, C{}, C{}}, 1}}));
    CHECK_THROWS_AS(iterated_coproduct_sh(0, Element(C{1})), DomainError);
}

TEST_CASE("counit_sh") {
    CHECK(counit_sh(Element::unit()) == 1);
    CHECK(counit_sh(Element(C{2, 1})) == 0);
    CHECK(counit_sh(Element::unit() * Rational(3) - Element(C{4}, Rational(1, 2))) == 3);
}

TEST_CASE("antipode_sh") {
    CHECK(antipode_sh(C{1}) == Element(C{1}, -1));
    CHECK(antipode_sh(C{2}) == Element(C{2}, -1));
    CHECK(antipode_sh(C{1, 1}) == Element(C{1, 1}));
    CHECK(antipode_sh(C{}) == Element::unit());
    // commutative Hopf algebra: S is an involution
    for (const auto& c : compositions_up_to(6))
        CHECK(antipode_sh(antipode_sh(Element(c))) == Element(c));
}
