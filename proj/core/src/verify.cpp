#include "hopfmzv/verify.hpp"

#include "hopfmzv/composition.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/linear.hpp"
#include "hopfmzv/morphism.hpp"
#include "hopfmzv/mzv.hpp"
#include "hopfmzv/quasi_shuffle.hpp"
#include "hopfmzv/shuffle.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_map>

namespace hopfmzv {

namespace {

using Clock = std::chrono::steady_clock;

/// Runs one property: the body calls fail() at the first counterexample and
/// bumps `checks` once per verified instance.
class Property {
public:
    Property(std::string suite, std::string name, unsigned bound) : started_(Clock::now()) {
        result_.suite = std::move(suite);
        result_.property = std::move(name);
        result_.max_weight = bound;
    }

    void pass() { ++result_.checks; }

    bool expect(bool ok, const std::function<std::string()>& describe) {
        if (ok) {
            pass();
            return true;
        }
        result_.passed = false;
        result_.counterexample = describe();
        return false;
    }

    PropertyResult finish() {
        result_.seconds = std::chrono::duration<double>(Clock::now() - started_).count();
        return std::move(result_);
    }

private:
    PropertyResult result_;
    Clock::time_point started_;
};

std::string lit(const Composition& c) { return c.to_literal(); }

std::vector<Composition> nonunit_up_to(unsigned max_weight) {
    auto all = compositions_up_to(max_weight);
    all.erase(all.begin());
    return all;
}

struct HopfOps {
    std::function<Element(const Composition&, const Composition&)> mul;
    std::function<TensorElement(const Composition&)> cop;
    std::function<Element(const Composition&)> antipode;
    std::function<Rational(const Element&)> counit;
};

TensorElement cop_left(const HopfOps& ops, const TensorElement& t) {
    TensorElement out(3);
    for (const auto& [key, q] : t)
        for (const auto& [split, c] : ops.cop(key[0]))
            out.add_term({split[0], split[1], key[1]}, q * c);
    return out;
}

TensorElement cop_right(const HopfOps& ops, const TensorElement& t) {
    TensorElement out(3);
    for (const auto& [key, q] : t)
        for (const auto& [split, c] : ops.cop(key[1]))
            out.add_term({key[0], split[0], split[1]}, q * c);
    return out;
}

void hopf_axioms(const std::string& suite, const HopfOps& ops, unsigned bound, unsigned antipode_bound,
                 std::vector<PropertyResult>& out) {
    {
        Property prop(suite, "coassociativity", bound);
        for (const auto& c : compositions_up_to(bound)) {
            const auto d = ops.cop(c);
            if (!prop.expect(cop_left(ops, d) == cop_right(ops, d), [&] { return "s=" + lit(c); }))
                break;
        }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "counit laws", bound);
        for (const auto& c : compositions_up_to(bound)) {
            Element left, right;
            for (const auto& [key, q] : ops.cop(c)) {
                left += Element(key[1], q * ops.counit(Element(key[0])));
                right += Element(key[0], q * ops.counit(Element(key[1])));
            }
            if (!prop.expect(left == Element(c) && right == Element(c), [&] {
                    return "s=" + lit(c) + ": (eps x id)D = " + to_string(left) + ", (id x eps)D = " + to_string(right);
                }))
                break;
        }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "coproduct is an algebra map", bound);
        const auto basis = nonunit_up_to(bound);
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i)
            for (std::size_t j = i; j < basis.size() && ok; ++j) {
                const auto& a = basis[i];
                const auto& b = basis[j];
                if (a.weight() + b.weight() > bound)
                    continue;
                TensorElement lhs(2);
                for (const auto& [c, q] : ops.mul(a, b)) {
                    auto t = ops.cop(c);
                    t *= q;
                    lhs += t;
                }
                const auto rhs = tensor_multiply(ops.cop(a), ops.cop(b), ops.mul);
                ok = prop.expect(lhs == rhs, [&] {
                    return "a=" + lit(a) + " b=" + lit(b) + ": D(ab) = " + to_string(lhs) +
                           ", D(a)D(b) = " + to_string(rhs);
                });
            }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "antipode axiom", antipode_bound);
        for (const auto& c : compositions_up_to(antipode_bound)) {
            Element left, right;
            for (const auto& [key, q] : ops.cop(c)) {
                for (const auto& [s, r] : ops.antipode(key[0]))
                    left += ops.mul(s, key[1]) * (q * r);
                for (const auto& [s, r] : ops.antipode(key[1]))
                    right += ops.mul(key[0], s) * (q * r);
            }
            const Element expected = Element::unit() * ops.counit(Element(c));
            if (!prop.expect(left == expected && right == expected, [&] {
                    return "s=" + lit(c) + ": m(S x id)D = " + to_string(left) + ", m(id x S)D = " + to_string(right);
                }))
                break;
        }
        out.push_back(prop.finish());
    }
}

HopfOps shuffle_ops() {
    return {[](const Composition& a, const Composition& b) { return shuffle(a, b); },
            [](const Composition& c) { return coproduct_sh(c); },
            [](const Composition& c) { return antipode_sh(c); },
            [](const Element& e) { return counit_sh(e); }};
}

HopfOps qsh_ops() {
    return {[](const Composition& a, const Composition& b) { return stuffle(a, b); },
            [](const Composition& c) { return coproduct_dec(c); },
            [](const Composition& c) { return antipode_qsh(c); },
            [](const Element& e) { return counit_dec(e); }};
}

// Every interleaving of two words, by choosing which positions take `a`.
std::map<Word, std::uint64_t> brute_force_interleavings(const Word& a, const Word& b) {
    std::map<Word, std::uint64_t> out;
    const std::size_t n = a.size() + b.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != a.size())
            continue;
        Word w;
        std::size_t ia = 0, ib = 0;
        for (std::size_t pos = 0; pos < n; ++pos)
            w.push_back(mask & (std::uint64_t{1} << pos) ? a[ia++] : b[ib++]);
        ++out[w];
    }
    return out;
}

std::vector<Word> words_of_length(std::size_t n) {
    std::vector<Word> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Word w;
        for (std::size_t i = 0; i < n; ++i)
            w.push_back(mask & (std::uint64_t{1} << i) ? Letter::x1 : Letter::x0);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<PropertyResult> suite_hopf_shuffle(std::optional<unsigned> w) {
    const std::string suite = "hopf-shuffle";
    std::vector<PropertyResult> out;
    hopf_axioms(suite, shuffle_ops(), w.value_or(7), w.value_or(6), out);
    {
        const unsigned bound = w.value_or(6);
        Property prop(suite, "delta_i commutes with the coproduct", bound);
        bool ok = true;
        for (const auto& c : compositions_up_to(bound)) {
            for (int i = 1; i <= static_cast<int>(bound) + 1 && ok; ++i) {
                const auto lhs = lifted_delta(i, coproduct_sh(c));
                const auto rhs = coproduct_sh(delta(i, c));
                ok = prop.expect(lhs == rhs, [&] { return "s=" + lit(c) + " i=" + std::to_string(i); });
            }
            if (!ok)
                break;
        }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(6);
        Property prop(suite, "lifted p operators commute", bound);
        bool ok = true;
        for (const auto& u : compositions_up_to(bound)) {
            for (const auto& v : compositions_up_to(bound - u.weight())) {
                TensorElement t(2);
                t.add_term({u, v}, 1);
                const int top = static_cast<int>(u.depth() + v.depth()) + 2;
                for (int i = 1; i <= top && ok; ++i)
                    for (int j = i + 1; j <= top && ok; ++j)
                        ok = prop.expect(lifted_p(i, lifted_p(j, t)) == lifted_p(j, lifted_p(i, t)), [&] {
                            return lit(u) + "⊗" + lit(v) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
                        });
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(8);
        Property prop(suite, "word shuffle matches brute-force interleaving", bound);
        bool ok = true;
        for (std::size_t total = 0; total <= bound && ok; ++total)
            for (std::size_t la = 0; la <= total && ok; ++la)
                for (const auto& a : words_of_length(la)) {
                    for (const auto& b : words_of_length(total - la)) {
                        ok = prop.expect(word_shuffle(a, b) == brute_force_interleavings(a, b),
                                         [&] { return "a=\"" + to_string(a) + "\" b=\"" + to_string(b) + "\""; });
                        if (!ok)
                            break;
                    }
                    if (!ok)
                        break;
                }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(4);
        Property prop(suite, "shuffle coefficient sum is binomial", bound);
        bool ok = true;
        for (const auto& a : compositions_up_to(bound)) {
            for (const auto& b : compositions_up_to(bound)) {
                Rational sum = 0;
                for (const auto& [c, q] : shuffle(a, b))
                    sum += q;
                ok = prop.expect(sum == Rational(binomial(a.weight() + b.weight(), a.weight())),
                                 [&] { return "a=" + lit(a) + " b=" + lit(b) + " sum=" + to_display_string(sum); });
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(prop.finish());
    }
    return out;
}

// Convolution-inverse recursion with ∗ and Δ_dec, independent of the
// closed-form antipode.
Element qsh_convolution_antipode(const Composition& c, std::map<Composition, Element, BasisLess>& memo) {
    if (c.is_unit())
        return Element::unit();
    if (auto it = memo.find(c); it != memo.end())
        return it->second;
    Element s(c, -1);
    for (std::size_t split = 1; split < c.depth(); ++split) {
        const auto parts = c.parts();
        const Composition head(std::vector<Part>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(split)));
        s -= stuffle(qsh_convolution_antipode(head, memo), Element(c.tail(split)));
    }
    return memo.emplace(c, s).first->second;
}

std::vector<PropertyResult> suite_hopf_qsh(std::optional<unsigned> w) {
    const std::string suite = "hopf-qsh";
    std::vector<PropertyResult> out;
    hopf_axioms(suite, qsh_ops(), w.value_or(7), w.value_or(6), out);
    {
        const unsigned bound = w.value_or(6);
        Property prop(suite, "explicit antipode equals convolution inverse", bound);
        std::map<Composition, Element, BasisLess> memo;
        for (const auto& c : compositions_up_to(bound)) {
            const auto oracle = qsh_convolution_antipode(c, memo);
            const auto formula = antipode_qsh(c);
            if (!prop.expect(oracle == formula, [&] {
                    return "s=" + lit(c) + ": formula " + to_string(formula) + ", oracle " + to_string(oracle);
                }))
                break;
        }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(8);
        Property prop(suite, "zeta_Q' is multiplicative", bound);
        bool ok = true;
        const auto basis = compositions_up_to(bound);
        for (std::size_t i = 0; i < basis.size() && ok; ++i)
            for (std::size_t j = 0; j < basis.size() && ok; ++j) {
                const auto& a = basis[i];
                const auto& b = basis[j];
                if (a.weight() + b.weight() > bound)
                    continue;
                ok = prop.expect(zeta_q_prime(stuffle(a, b)) ==
                                     zeta_q_prime(Element(a)) * zeta_q_prime(Element(b)),
                                 [&] { return "a=" + lit(a) + " b=" + lit(b); });
            }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(7);
        Property prop(suite, "deconcatenation has depth+1 terms", bound);
        for (const auto& c : compositions_up_to(bound))
            if (!prop.expect(coproduct_dec(c).size() == c.depth() + 1, [&] { return "s=" + lit(c); }))
                break;
        out.push_back(prop.finish());
    }
    return out;
}

/// c0^{|s|−k} c1^k / |s|!: multiplicative because every interleaving keeps
/// the letter multiset.
Character letter_weight_character(const Rational& c0, const Rational& c1, unsigned max_weight) {
    Character::ValueMap values;
    for (const auto& c : compositions_up_to(max_weight)) {
        Rational v(Integer(1), factorial(c.weight()));
        for (std::size_t i = c.depth(); i < c.weight(); ++i)
            v *= c0;
        for (std::size_t i = 0; i < c.depth(); ++i)
            v *= c1;
        values.emplace(c, v);
    }
    return Character("letter-weight", max_weight, std::move(values));
}

std::vector<PropertyResult> suite_morphism(std::optional<unsigned> w) {
    const std::string suite = "morphism";
    std::vector<PropertyResult> out;
    const unsigned algebra_bound = w.value_or(8);
    const unsigned coalgebra_bound = w.value_or(7);
    const unsigned antipode_bound = w.value_or(6);
    const InducedMorphism psi(char_factorial(std::max({algebra_bound, coalgebra_bound, antipode_bound})));

    {
        Property prop(suite, "Psi(a sh b) = Psi(a) st Psi(b)", algebra_bound);
        const auto basis = nonunit_up_to(algebra_bound);
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i)
            for (std::size_t j = 0; j < basis.size() && ok; ++j) {
                const auto& a = basis[i];
                const auto& b = basis[j];
                if (a.weight() + b.weight() > algebra_bound)
                    continue;
                const auto lhs = psi.apply(shuffle(a, b));
                const auto rhs = stuffle(psi.apply(a), psi.apply(b));
                ok = prop.expect(lhs == rhs, [&] {
                    return "a=" + lit(a) + " b=" + lit(b) + ": " + to_string(lhs) + " vs " + to_string(rhs);
                });
            }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "(Psi x Psi) D_sh = D_dec Psi", coalgebra_bound);
        for (const auto& c : compositions_up_to(coalgebra_bound)) {
            TensorElement lhs(2);
            for (const auto& [key, q] : coproduct_sh(c))
                for (const auto& [x, qx] : psi.apply(key[0]))
                    for (const auto& [y, qy] : psi.apply(key[1]))
                        lhs.add_term({x, y}, q * qx * qy);
            const auto rhs = coproduct_dec(psi.apply(c));
            if (!prop.expect(lhs == rhs, [&] { return "s=" + lit(c); }))
                break;
        }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "Psi S_sh = S_st Psi", antipode_bound);
        for (const auto& c : compositions_up_to(antipode_bound))
            if (!prop.expect(psi.apply(antipode_sh(c)) == antipode_qsh(psi.apply(c)), [&] { return "s=" + lit(c); }))
                break;
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "zeta_Q' Psi_chi = chi", algebra_bound);
        std::vector<Character> characters{psi.character()};
        std::mt19937 rng(20240601u);
        std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
        for (int trial = 0; trial < 3; ++trial)
            characters.push_back(letter_weight_character(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                                         algebra_bound));
        bool ok = true;
        for (const auto& chi : characters) {
            const InducedMorphism m(chi);
            for (const auto& c : compositions_up_to(algebra_bound)) {
                ok = prop.expect(zeta_q_prime(m.apply(c)) == chi.value(c),
                                 [&] { return "chi=" + chi.label() + " s=" + lit(c); });
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "fast Psi agrees with the definition", algebra_bound);
        for (const auto& c : compositions_up_to(algebra_bound)) {
            const auto fast = psi.apply(c);
            const auto slow = psi.apply_definitional(Element(c));
            if (!prop.expect(fast == slow, [&] {
                    return "s=" + lit(c) + ": fast " + to_string(fast) + ", definitional " + to_string(slow);
                }))
                break;
        }
        out.push_back(prop.finish());
    }
    return out;
}

std::vector<PropertyResult> suite_order(std::optional<unsigned> w) {
    const std::string suite = "order";
    std::vector<PropertyResult> out;
    {
        const unsigned bound = w.value_or(10);
        Property prop(suite, "word encoding round trip", bound);
        for (const auto& c : compositions_up_to(bound))
            if (!prop.expect(decode_word(encode_word(c)) == c, [&] { return "s=" + lit(c); }))
                break;
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(8);
        Property prop(suite, "well-order is total with 2^(n-1) elements", bound);
        bool ok = true;
        for (unsigned n = 1; n <= bound && ok; ++n) {
            const auto basis = enumerate_basis(n);
            ok = prop.expect(basis.size() == (std::size_t{1} << (n - 1)) && basis.front() == Composition{n} &&
                                 basis.back() == Composition::ones(n),
                             [&] { return "n=" + std::to_string(n); });
            for (std::size_t i = 0; i < basis.size() && ok; ++i)
                for (std::size_t j = 0; j < basis.size() && ok; ++j) {
                    const auto cmp = order_cmp(basis[i], basis[j]);
                    const auto expected = i < j ? std::strong_ordering::less
                                                : (i == j ? std::strong_ordering::equal : std::strong_ordering::greater);
                    ok = prop.expect(cmp == expected, [&] { return lit(basis[i]) + " vs " + lit(basis[j]); });
                }
        }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(5);
        Property prop(suite, "extension lemma [u,w] < [v,w]", bound);
        bool ok = true;
        for (unsigned m = 1; m <= bound && ok; ++m) {
            const auto hm = enumerate_basis(m);
            for (unsigned pw = 0; pw <= bound && ok; ++pw)
                for (const auto& tail : enumerate_basis(pw))
                    for (std::size_t i = 0; i < hm.size() && ok; ++i)
                        for (std::size_t j = i + 1; j < hm.size() && ok; ++j)
                            ok = prop.expect(order_cmp(hm[i].concat(tail), hm[j].concat(tail)) ==
                                                 std::strong_ordering::less,
                                             [&] { return "u=" + lit(hm[i]) + " v=" + lit(hm[j]) + " w=" + lit(tail); });
        }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(7);
        Property prop(suite, "tensor extension lemma", bound);
        bool ok = true;
        // U, V: rank-2 tensors of equal weight; w appended as a third factor.
        for (unsigned total = 0; total <= bound && ok; ++total) {
            std::vector<std::vector<Composition>> tensors;
            for (unsigned a = 0; a <= total; ++a)
                for (const auto& x : enumerate_basis(a))
                    for (const auto& y : enumerate_basis(total - a))
                        tensors.push_back({x, y});
            for (unsigned pw = 0; pw + total <= bound && ok; ++pw)
                for (const auto& tail : enumerate_basis(pw))
                    for (const auto& u : tensors) {
                        for (const auto& v : tensors) {
                            if (!tensor_le(u, v))
                                continue;
                            auto ue = u, ve = v;
                            ue.push_back(tail);
                            ve.push_back(tail);
                            ok = prop.expect(tensor_le(ue, ve), [&] {
                                return lit(u[0]) + "⊗" + lit(u[1]) + " <= " + lit(v[0]) + "⊗" + lit(v[1]) +
                                       " with w=" + lit(tail);
                            });
                            if (!ok)
                                break;
                        }
                        if (!ok)
                            break;
                    }
        }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(6);
        Property prop(suite, "p_i preserves the order", bound);
        bool ok = true;
        for (unsigned n = 1; n <= bound && ok; ++n) {
            const auto hn = enumerate_basis(n);
            for (std::size_t ti = 0; ti < hn.size() && ok; ++ti)
                for (std::size_t si = ti; si < hn.size() && ok; ++si) {
                    const auto& t = hn[ti];
                    const auto& s = hn[si];
                    for (int i = 1; i <= static_cast<int>(s.depth()) && ok; ++i) {
                        const auto pt = p(i, t);
                        const auto ps = p(i, s);
                        for (const auto& [x, qx] : pt)
                            for (const auto& [y, qy] : ps)
                                if (ok)
                                    ok = prop.expect(order_cmp(x, y) != std::strong_ordering::greater, [&] {
                                        return "t=" + lit(t) + " s=" + lit(s) + " i=" + std::to_string(i);
                                    });
                    }
                }
        }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(7);
        Property prop(suite, "coproduct is upper triangular", bound);
        bool ok = true;
        for (const auto& c : compositions_up_to(bound)) {
            for (const auto& [key, q] : coproduct_sh(c)) {
                const std::vector<Composition> target{c};
                ok = prop.expect(tensor_le(key, target),
                                 [&] { return "s=" + lit(c) + " term " + lit(key[0]) + "⊗" + lit(key[1]); });
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(prop.finish());
    }
    return out;
}

std::vector<PropertyResult> suite_rota_baxter(std::optional<unsigned> w) {
    const unsigned bound = w.value_or(6);
    Property prop("rota-baxter", "I(a) sh I(b) = I(a sh I(b)) + I(I(a) sh b)", bound);
    const auto basis = nonunit_up_to(bound);
    bool ok = true;
    for (std::size_t i = 0; i < basis.size() && ok; ++i)
        for (std::size_t j = i; j < basis.size() && ok; ++j) {
            const Element a(basis[i]);
            const Element b(basis[j]);
            const auto lhs = shuffle(rota_baxter_I(a), rota_baxter_I(b));
            const auto rhs = rota_baxter_I(shuffle(a, rota_baxter_I(b))) + rota_baxter_I(shuffle(rota_baxter_I(a), b));
            ok = prop.expect(lhs == rhs, [&] { return "a=" + lit(basis[i]) + " b=" + lit(basis[j]); });
        }
    return {prop.finish()};
}

Character with_zero_at_two() {
    // χ([1]) = 1, χ([2]) = 0, χ([1,1]) = 1/2 is multiplicative up to weight 2.
    return Character("zero-at-2", 2,
                     {{Composition{}, 1}, {Composition{1}, 1}, {Composition{2}, 0}, {Composition{1, 1}, Rational(1, 2)}});
}

std::vector<PropertyResult> suite_triangular(std::optional<unsigned> w) {
    const std::string suite = "triangular";
    const unsigned bound = w.value_or(9);
    std::vector<PropertyResult> out;
    const InducedMorphism psi(char_factorial(bound));
    {
        Property prop(suite, "Psi matrix is upper triangular with diagonal prod chi([s_i])", bound);
        bool ok = true;
        for (unsigned n = 1; n <= bound && ok; ++n) {
            const auto m = psi.matrix(n);
            ok = prop.expect(m.is_upper_triangular(), [&] { return "n=" + std::to_string(n) + " below-diagonal entry"; });
            const auto diag = m.diagonal();
            for (std::size_t i = 0; i < m.dimension() && ok; ++i) {
                Rational expected = 1;
                for (Part s : m.basis[i])
                    expected *= psi.character().value(Composition{s});
                ok = prop.expect(diag[i] == expected, [&] {
                    return "n=" + std::to_string(n) + " diagonal at " + lit(m.basis[i]) + " = " + to_display_string(diag[i]);
                });
            }
        }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "Psi preserves weight", bound);
        for (const auto& c : compositions_up_to(bound)) {
            const auto image = psi.apply(c);
            const bool ok = image.is_homogeneous() && (image.is_zero() || image.max_weight() == c.weight());
            if (!prop.expect(ok, [&] { return "s=" + lit(c); }))
                break;
        }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "Psi(Psi^-1(e)) = e and Psi^-1(Psi(e)) = e", bound);
        for (const auto& c : compositions_up_to(bound)) {
            const Element e(c);
            if (!prop.expect(psi.apply(psi.inverse_apply(e)) == e && psi.inverse_apply(psi.apply(e)) == e,
                             [&] { return "s=" + lit(c); }))
                break;
        }
        out.push_back(prop.finish());
    }
    {
        Property prop(suite, "singular character is detected", 2);
        const InducedMorphism singular(with_zero_at_two());
        bool raised = false;
        unsigned named = 0;
        try {
            singular.inverse_apply(Element(Composition{2}));
        } catch (const SingularityError& e) {
            raised = true;
            named = e.part();
        }
        const auto diag = singular.matrix(2).diagonal();
        prop.expect(char_validate(singular.character()).valid && raised && named == 2 &&
                        std::count(diag.begin(), diag.end(), Rational(0)) > 0,
                    [&] { return "singularity not reported for chi([2]) = 0"; });
        out.push_back(prop.finish());
    }
    return out;
}

std::vector<PropertyResult> suite_double_shuffle(std::optional<unsigned> w) {
    const std::string suite = "double-shuffle";
    const unsigned total_bound = w.value_or(6);
    const unsigned each_bound = w ? *w / 2 : 3;
    const TruncationConfig cfg;
    std::vector<PropertyResult> out;
    std::vector<Composition> admissible;
    for (const auto& c : compositions_up_to(each_bound))
        if (is_admissible(c))
            admissible.push_back(c);
    {
        Property prop(suite, "|zeta(s st t) - zeta(s sh t)| <= tolerance", total_bound);
        bool ok = true;
        for (const auto& s : admissible)
            for (const auto& t : admissible) {
                if (!ok || s.weight() + t.weight() > total_bound)
                    continue;
                const double r = double_shuffle_residual(s, t, cfg);
                ok = prop.expect(r <= cfg.tolerance,
                                 [&] { return "s=" + lit(s) + " t=" + lit(t) + " residual=" + std::to_string(r); });
            }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(4);
        Property prop(suite, "zeta(s) zeta(t) matches zeta(s st t)", bound);
        bool ok = true;
        // Stuffle outputs share most of their terms across pairs.
        std::unordered_map<Composition, double, CompositionHash> values;
        const auto zeta = [&](const Composition& c) {
            auto it = values.find(c);
            if (it == values.end())
                it = values.emplace(c, zeta_truncated(c, cfg)).first;
            return it->second;
        };
        const auto eval = [&](const Element& e) {
            double total = 0;
            for (const auto& [c, q] : e)
                total += q.get_d() * zeta(c);
            return total;
        };
        for (const auto& s : compositions_up_to(bound))
            for (const auto& t : compositions_up_to(bound)) {
                if (!ok || !is_admissible(s) || !is_admissible(t))
                    continue;
                const double diff =
                    std::abs(zeta(s) * zeta(t) - eval(stuffle(s, t)));
                ok = prop.expect(diff <= 5 * cfg.tolerance, [&] { return "s=" + lit(s) + " t=" + lit(t); });
            }
        out.push_back(prop.finish());
    }
    {
        const unsigned bound = w.value_or(6);
        Property prop(suite, "truncated zeta is nondecreasing in N", bound);
        bool ok = true;
        for (const auto& c : compositions_up_to(bound)) {
            if (!is_admissible(c))
                continue;
            double previous = 0;
            for (std::size_t n : {10u, 20u, 50u, 100u, 1000u}) {
                const double v = zeta_truncated(c, {n, cfg.tolerance});
                ok = prop.expect(v >= previous, [&] { return "s=" + lit(c) + " N=" + std::to_string(n); });
                previous = v;
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(prop.finish());
    }
    return out;
}

} // namespace

std::vector<Suite> all_suites() {
    return {Suite::hopf_shuffle, Suite::hopf_qsh,   Suite::morphism,      Suite::order,
            Suite::rota_baxter,  Suite::triangular, Suite::double_shuffle};
}

std::string suite_name(Suite s) {
    switch (s) {
    case Suite::hopf_shuffle: return "hopf-shuffle";
    case Suite::hopf_qsh: return "hopf-qsh";
    case Suite::morphism: return "morphism";
    case Suite::order: return "order";
    case Suite::rota_baxter: return "rota-baxter";
    case Suite::triangular: return "triangular";
    case Suite::double_shuffle: return "double-shuffle";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(const std::string& name) {
    for (Suite s : all_suites())
        if (suite_name(s) == name)
            return s;
    return std::nullopt;
}

std::vector<PropertyResult> run_suite(Suite suite, std::optional<unsigned> max_weight) {
    switch (suite) {
    case Suite::hopf_shuffle: return suite_hopf_shuffle(max_weight);
    case Suite::hopf_qsh: return suite_hopf_qsh(max_weight);
    case Suite::morphism: return suite_morphism(max_weight);
    case Suite::order: return suite_order(max_weight);
    case Suite::rota_baxter: return suite_rota_baxter(max_weight);
    case Suite::triangular: return suite_triangular(max_weight);
    case Suite::double_shuffle: return suite_double_shuffle(max_weight);
    }
    return {};
}

std::string report_json(const std::vector<PropertyResult>& results) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json j = {{"suite", r.suite},   {"property", r.property}, {"max_weight", r.max_weight},
                            {"checks", r.checks}, {"passed", r.passed},     {"seconds", r.seconds}};
        if (!r.passed)
            j["counterexample"] = r.counterexample;
        out.push_back(j);
    }
    return out.dump(2);
}

} // namespace hopfmzv
