#include "hopfmzv/errors.hpp"
#include "hopfmzv/morphism.hpp"
#include "hopfmzv/quasi_shuffle.hpp"
#include "hopfmzv/rational.hpp"
#include "hopfmzv/shuffle.hpp"

#include "doctest.h"

#include <thread>

using namespace hopfmzv;
using C = Composition;

namespace {

Rational q(long n, unsigned long d = 1) { return Rational(n, d); }

Element e(std::initializer_list<std::pair<C, Rational>> terms) {
    Element out;
    for (const auto& [c, k] : terms)
        out.add_term(c, k);
    return out;
}

Character table(unsigned max_weight, std::initializer_list<std::pair<C, Rational>> values) {
    Character::ValueMap m;
    for (const auto& [c, v] : values)
        m.emplace(c, v);
    return Character("test", max_weight, std::move(m));
}

} // namespace

TEST_CASE("char_factorial values") {
    const auto chi = char_factorial();
    CHECK(chi.value(C{}) == 1);
    CHECK(chi.value(C{2, 1}) == q(1, 6));
    CHECK(chi.value(C{1, 1}) == q(1, 2));
    CHECK(chi.max_weight() == 12);
    CHECK_THROWS_AS(chi.value(C{13}), CoverageError);
}

TEST_CASE("char_validate") {
    CHECK(char_validate(char_factorial(6)));

    const auto bad = table(2, {{C{1}, 1}, {C{2}, 1}, {C{1, 1}, 1}});
    const auto result = char_validate(bad);
    CHECK_FALSE(result.valid);
    REQUIRE(result.violation.has_value());
    CHECK(result.violation->first == C{1});
    CHECK(result.violation->second == C{1});

    // [1,1] ↦ c² is not multiplicative: χ([1] sh [1]) = 2c²
    const Rational c = 3;
    const auto doubled = char_validate(table(2, {{C{1}, c}, {C{2}, c * c / 2}, {C{1, 1}, c * c}}));
    CHECK_FALSE(doubled.valid);
    CHECK(doubled.violation == std::pair{C{1}, C{1}});
    CHECK(char_validate(table(2, {{C{1}, c}, {C{2}, c * c / 2}, {C{1, 1}, c * c / 2}})));
}

TEST_CASE("Character rejects bad tables") {
    CHECK_THROWS_AS(table(2, {{C{1}, 1}, {C{2}, 1}}), CharacterError);
    CHECK_THROWS_AS(table(1, {{C{}, 2}, {C{1}, 1}}), CharacterError);
    CHECK_THROWS_AS(table(1, {{C{1}, 1}, {C{2}, 1}}), CharacterError);
}

TEST_CASE("chi_alpha") {
    const auto chi = char_factorial();
    CHECK(chi_alpha(chi, C{2}, Element(C{1, 1})) == q(1, 2));
    CHECK(chi_alpha(chi, C{1, 1}, Element(C{1, 1})) == 1);
    for (const auto& s : enumerate_basis(5))
        CHECK(chi_alpha(chi, C{5}, Element(s)) == q(1, 120));
    CHECK_THROWS_AS(chi_alpha(char_factorial(2), C{1, 1, 1}, Element(C{1, 1, 1})), CoverageError);
}

TEST_CASE("golden values of Psi for the factorial character") {
    const auto chi = char_factorial();
    const std::vector<std::pair<C, Element>> golden{
        {C{1, 1}, e({{C{2}, q(1, 2)}, {C{1, 1}, 1}})},
        {C{2, 1}, e({{C{3}, q(1, 6)}, {C{2, 1}, q(1, 2)}})},
        {C{1, 2}, e({{C{3}, q(1, 6)}, {C{1, 2}, q(1, 2)}, {C{2, 1}, q(-1, 2)}})},
        {C{1, 1, 1}, e({{C{3}, q(1, 6)}, {C{1, 2}, q(1, 2)}, {C{2, 1}, q(1, 2)}, {C{1, 1, 1}, 1}})},
        {C{3, 1}, e({{C{4}, q(1, 24)}, {C{3, 1}, q(1, 6)}})},
        {C{2, 2}, e({{C{4}, q(1, 24)}, {C{2, 2}, q(1, 4)}, {C{3, 1}, q(-1, 3)}})},
    };
    for (const auto& [s, image] : golden) {
        CAPTURE(s.to_literal());
        CHECK(psi_apply(chi, Element(s)) == image);
        CHECK(psi_apply_fast(chi, Element(s)) == image);
    }
    for (Part n = 1; n <= 8; ++n)
        CHECK(psi_apply_fast(chi, Element(C{n})) == Element(C{n}, Rational(Integer(1), factorial(n))));
    CHECK(psi_apply(chi, Element::unit()) == Element::unit());
    CHECK(psi_apply_fast(chi, Element::unit()) == Element::unit());
}

TEST_CASE("fast and definitional Psi agree") {
    const auto chi = char_factorial();
    for (const auto& s : compositions_up_to(6))
        CHECK(psi_apply_fast(chi, Element(s)) == psi_apply(chi, Element(s)));
}

TEST_CASE("Psi is an algebra and coalgebra map") {
    const InducedMorphism psi(char_factorial());
    const auto comps = compositions_up_to(5);
    for (const auto& a : comps)
        for (const auto& b : comps)
            if (a.weight() + b.weight() <= 6)
                CHECK(psi.apply(shuffle(a, b)) == stuffle(psi.apply(a), psi.apply(b)));

    for (const auto& s : compositions_up_to(5)) {
        TensorElement lhs(2);
        for (const auto& [key, c] : coproduct_sh(s)) {
            const auto l = psi.apply(key[0]), r = psi.apply(key[1]);
            for (const auto& [lc, lq] : l)
                for (const auto& [rc, rq] : r)
                    lhs.add_term({lc, rc}, c * lq * rq);
        }
        CHECK(lhs == coproduct_dec(psi.apply(Element(s))));
        CHECK(zeta_q_prime(psi.apply(s)) == Rational(Integer(1), factorial(s.weight())));
    }
}

TEST_CASE("psi_matrix") {
    const auto chi = char_factorial();
    const auto m1 = psi_matrix(chi, 1);
    CHECK(m1.entries == std::vector<std::vector<Rational>>{{1}});

    const auto m2 = psi_matrix(chi, 2);
    CHECK(m2.basis == std::vector<C>{C{2}, C{1, 1}});
    CHECK(m2.entries == std::vector<std::vector<Rational>>{{q(1, 2), q(1, 2)}, {0, 1}});
    CHECK(m2.is_upper_triangular());
    CHECK(m2.to_csv() == "\"[2]\",\"[1,1]\"\n1/2,1/2\n0/1,1/1\n");

    const auto m3 = psi_matrix(chi, 3);
    CHECK(m3.diagonal() == std::vector<Rational>{q(1, 6), q(1, 2), q(1, 2), 1});
}

TEST_CASE("psi_inverse_apply") {
    const auto chi = char_factorial();
    CHECK(psi_inverse_apply(chi, Element(C{2})) == Element(C{2}, 2));
    CHECK(psi_inverse_apply(chi, Element(C{1, 1})) == Element(C{1, 1}) - Element(C{2}));
    for (Part n = 1; n <= 7; ++n)
        CHECK(psi_inverse_apply(chi, Element(C{n})) == Element(C{n}, Rational(factorial(n))));
    const auto x = e({{C{}, 3}, {C{2, 1}, q(-2, 5)}, {C{1, 1, 1, 1}, 7}});
    CHECK(psi_inverse_apply(chi, psi_apply_fast(chi, x)) == x);
    CHECK(psi_apply_fast(chi, psi_inverse_apply(chi, x)) == x);
}

TEST_CASE("singular character") {
    const auto chi = table(2, {{C{1}, 1}, {C{2}, 0}, {C{1, 1}, q(1, 2)}});
    REQUIRE(char_validate(chi));
    CHECK(psi_matrix(chi, 2).diagonal() == std::vector<Rational>{0, 1});
    try {
        (void)psi_inverse_apply(chi, Element(C{1, 1}));
        FAIL("expected SingularityError");
    } catch (const SingularityError& err) {
        CHECK(err.part() == 2);
    }
    // weight 1 alone is still invertible
    CHECK(psi_inverse_apply(chi, Element(C{1})) == Element(C{1}));
}

TEST_CASE("coverage errors") {
    const auto chi = char_factorial(3);
    CHECK_THROWS_AS(psi_apply_fast(chi, Element(C{2, 2})), CoverageError);
    CHECK_THROWS_AS(psi_matrix(chi, 4), CoverageError);
    CHECK_THROWS_AS(psi_inverse_apply(chi, Element(C{4})), CoverageError);
}

TEST_CASE("character files") {
    const auto chi = parse_character(serialize(char_factorial(4)));
    CHECK(chi.max_weight() == 4);
    CHECK(chi.value(C{1, 3}) == q(1, 24));

    const auto zero = load_character(HOPFMZV_TEST_DATA_DIR "/zero_at_2.json");
    CHECK(zero.value(C{2}) == 0);
    CHECK(zero.label() == "zero-at-2");

    CHECK_THROWS_AS(load_character(HOPFMZV_TEST_DATA_DIR "/not_multiplicative.json"), CharacterError);
    CHECK_THROWS_AS(load_character(HOPFMZV_TEST_DATA_DIR "/incomplete.json"), CharacterError);
    CHECK_THROWS_AS(load_character(HOPFMZV_TEST_DATA_DIR "/missing.json"), CharacterError);
    CHECK_THROWS_AS(parse_character("{"), CharacterError);
    CHECK_THROWS_AS(parse_character(R"({"max_weight": 1, "values": {"1": 1}})"), CharacterError);
}

TEST_CASE("concurrent use of one InducedMorphism") {
    const InducedMorphism psi(char_factorial());
    const auto basis = enumerate_basis(7);
    std::vector<std::vector<Element>> results(4);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < results.size(); ++t)
        threads.emplace_back([&, t] {
            for (const auto& s : basis)
                results[t].push_back(psi.apply(s));
        });
    for (auto& th : threads)
        th.join();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto expected = psi_apply_fast(char_factorial(), Element(basis[i]));
        for (const auto& r : results)
            CHECK(r[i] == expected);
    }
}
