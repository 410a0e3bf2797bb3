#include "hopfmzv/composition.hpp"
#include "hopfmzv/errors.hpp"

#include "doctest.h"

#include <set>

using namespace hopfmzv;

namespace {

using C = Composition;

// Brute force: every composition of n as a subset of the n-1 cut points.
std::set<std::vector<Part>> compositions_by_cuts(unsigned n) {
    std::set<std::vector<Part>> out;
    if (n == 0) {
        out.insert(std::vector<Part>{});
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<Part> parts{1};
        for (unsigned g = 0; g + 1 < n; ++g) {
            if (mask & (1u << g))
                parts.push_back(1);
            else
                ++parts.back();
        }
        out.insert(parts);
    }
    return out;
}

} // namespace

TEST_CASE("weight and depth") {
    CHECK(C{}.weight() == 0);
    CHECK(C{}.depth() == 0);
    CHECK(C{}.is_unit());
    CHECK(C{2, 1}.weight() == 3);
    CHECK(C{1, 1, 1, 1}.weight() == 4);
    CHECK(C{1, 1, 1, 1}.depth() == 4);
    CHECK_THROWS_AS(C({2, 0}), DomainError);
}

TEST_CASE("order_cmp follows the H_4 chain") {
    CHECK(order_cmp(C{4}, C{3, 1}) == std::strong_ordering::less);
    CHECK(order_cmp(C{2, 1, 1}, C{1, 3}) == std::strong_ordering::less);
    CHECK(order_cmp(C{2}, C{2}) == std::strong_ordering::equal);
    CHECK(order_cmp(C{1, 1}, C{2}) == std::strong_ordering::greater);
    CHECK_THROWS_AS(order_cmp(C{2}, C{3}), ComparisonError);
}

TEST_CASE("enumerate_basis") {
    CHECK(enumerate_basis(0) == std::vector<C>{C{}});
    CHECK(enumerate_basis(2) == std::vector<C>{C{2}, C{1, 1}});
    const std::vector<C> h4{C{4},       C{3, 1},    C{2, 2},    C{2, 1, 1},
                            C{1, 3},    C{1, 2, 1}, C{1, 1, 2}, C{1, 1, 1, 1}};
    CHECK(enumerate_basis(4) == h4);

    for (unsigned n = 0; n <= 10; ++n) {
        const auto basis = enumerate_basis(n);
        std::set<std::vector<Part>> got;
        for (const auto& c : basis)
            got.insert({c.begin(), c.end()});
        CHECK(got == compositions_by_cuts(n));
        if (n >= 1)
            CHECK(basis.size() == (std::size_t{1} << (n - 1)));
        for (std::size_t i = 0; i + 1 < basis.size(); ++i)
            CHECK(order_cmp(basis[i], basis[i + 1]) == std::strong_ordering::less);
    }
    CHECK(enumerate_basis(7).front() == C{7});
    CHECK(enumerate_basis(7).back() == C::ones(7));
}

TEST_CASE("order is total on H_n") {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto basis = enumerate_basis(n);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                const auto ab = order_cmp(a, b);
                const auto ba = order_cmp(b, a);
                if (a == b)
                    CHECK(ab == std::strong_ordering::equal);
                else
                    CHECK(((ab == std::strong_ordering::less && ba == std::strong_ordering::greater) ||
                           (ab == std::strong_ordering::greater && ba == std::strong_ordering::less)));
            }
    }
}

TEST_CASE("extension lemma") {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned p = 0; p <= 5; ++p)
            for (const auto& u : enumerate_basis(m))
                for (const auto& v : enumerate_basis(m))
                    if (order_cmp(u, v) == std::strong_ordering::less)
                        for (const auto& w : enumerate_basis(p))
                            CHECK(order_cmp(u.concat(w), v.concat(w)) == std::strong_ordering::less);
}

TEST_CASE("tensor_le pre-order") {
    const std::vector<C> unit_one{C{}, C{1}};
    const std::vector<C> one{C{1}};
    CHECK(tensor_le(unit_one, one));

    const std::vector<C> two_two{C{2}, C{2}};
    const std::vector<C> one_three{C{1, 3}};
    const std::vector<C> twotwo{C{2, 2}};
    CHECK(tensor_le(two_two, one_three));
    CHECK(tensor_le(two_two, twotwo));
    CHECK(tensor_le(twotwo, two_two));  // not antisymmetric

    const std::vector<C> four{C{4}};
    CHECK_THROWS_AS(tensor_le(four, one), ComparisonError);
}

TEST_CASE("tensor extension lemma") {
    // u ≤ v as rank-2 tensors ⇒ u⊗w ≤ v⊗w, total weight ≤ 7
    for (unsigned total = 0; total <= 5; ++total) {
        std::vector<std::vector<C>> tensors;
        for (unsigned a = 0; a <= total; ++a)
            for (const auto& x : enumerate_basis(a))
                for (const auto& y : enumerate_basis(total - a))
                    tensors.push_back({x, y});
        for (unsigned p = 0; p + total <= 7; ++p)
            for (const auto& w : enumerate_basis(p))
                for (const auto& u : tensors)
                    for (const auto& v : tensors)
                        if (tensor_le(u, v)) {
                            auto uw = u, vw = v;
                            uw.push_back(w);
                            vw.push_back(w);
                            CHECK(tensor_le(uw, vw));
                        }
    }
}

TEST_CASE("word encoding") {
    CHECK(encode_word(C{1}) == Word{Letter::x1});
    CHECK(encode_word(C{2, 1}) == Word{Letter::x0, Letter::x1, Letter::x1});
    CHECK(encode_word(C{3}) == Word{Letter::x0, Letter::x0, Letter::x1});
    CHECK(encode_word(C{}).empty());
    CHECK(to_string(encode_word(C{2, 1})) == "x0 x1 x1");

    CHECK(decode_word({}) == C{});
    CHECK(decode_word({Letter::x0, Letter::x0, Letter::x1}) == C{3});
    CHECK_THROWS_AS(decode_word({Letter::x1, Letter::x0}), DomainError);

    for (const auto& c : compositions_up_to(10)) {
        const auto w = encode_word(c);
        CHECK(w.size() == c.weight());
        CHECK(decode_word(w) == c);
    }
}

TEST_CASE("coarsenings") {
    CHECK(coarsenings(C{2}) == std::vector<C>{C{2}});
    CHECK(coarsenings(C{1, 1}) == std::vector<C>{C{2}, C{1, 1}});
    CHECK(coarsenings(C{1, 1, 1}) == std::vector<C>{C{3}, C{2, 1}, C{1, 2}, C{1, 1, 1}});
    CHECK(coarsenings(C{}) == std::vector<C>{C{}});
    for (const auto& c : compositions_up_to(8))
        if (c.depth() >= 1)
            CHECK(coarsenings(c).size() == (std::size_t{1} << (c.depth() - 1)));
}

TEST_CASE("is_admissible") {
    CHECK(is_admissible(C{2, 1}));
    CHECK_FALSE(is_admissible(C{1, 2}));
    CHECK_FALSE(is_admissible(C{}));
}

TEST_CASE("canonical text forms") {
    CHECK(C{2, 1}.to_string() == "2,1");
    CHECK(C{}.to_string() == "");
    CHECK(C{2, 1}.to_literal() == "[2,1]");
    CHECK(C{}.to_literal() == "1");
    CHECK(Composition::parse_canonical("3,1,2") == C{3, 1, 2});
    CHECK(Composition::parse_canonical("") == C{});
    CHECK_THROWS_AS(Composition::parse_canonical("1,,2"), ParseError);
    CHECK_THROWS_AS(Composition::parse_canonical("0"), ParseError);
    CHECK_THROWS_AS(Composition::parse_canonical("2,x"), ParseError);
}
