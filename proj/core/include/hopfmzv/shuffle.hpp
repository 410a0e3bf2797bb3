#pragma once

#include "hopfmzv/composition.hpp"
#include "hopfmzv/linear.hpp"
#include "hopfmzv/rational.hpp"

#include <cstdint>
#include <map>

namespace hopfmzv {

// The shuffle Hopf algebra (H, ⧢, 𝟏, Δ≥1, ε≥1) on compositions.

/// Word shuffle with multiplicities: every interleaving of `a` and `b`.
std::map<Word, std::uint64_t> word_shuffle(const Word& a, const Word& b);

/// Shuffle product pulled back along the word encoding.
Element shuffle(const Composition& a, const Composition& b);
Element shuffle(const Element& a, const Element& b);

/// I([s1,...,sk]) = [s1+1,...,sk]. Throws DomainError on a unit term.
Element rota_baxter_I(const Element& e);

/// δ_i[s] = Σ_{j≤i} s_j [.., s_j+1, ..] for 1 ≤ i ≤ depth; zero otherwise
/// and on 𝟏.
Element delta(int i, const Composition& c);
Element delta(int i, const Element& e);

/// p_i = δ_i − δ_{i−1}:
///   s_i [.., s_i+1, ..]   for 1 ≤ i ≤ k,
///   −δ_k [s]              for i = k+1,
///   0                     for i ≥ k+2, i ≤ 0, and on 𝟏.
Element p(int i, const Composition& c);
Element p(int i, const Element& e);

/// Lifted operators on rank-2 tensors,
///   (id ⊗̃ p_i + p_i ⊗ id)([u]⊗[v]) = [u]⊗p_{i−dep u}[v] + p_i[u]⊗[v],
/// and likewise for δ_i.
TensorElement lifted_p(int i, const TensorElement& t);
TensorElement lifted_delta(int i, const TensorElement& t);

/// Δ≥1, from Δ([1_k]) = Σ_j [1_j]⊗[1_{k−j}] by applying the lifted p_i
/// (s_i − 1) times for i = 1..k and dividing by ∏(s_i − 1)!.
/// Memoized per basis element.
TensorElement coproduct_sh(const Composition& c);
TensorElement coproduct_sh(const Element& e);

/// Δ≥1 without its 𝟏⊗x and x⊗𝟏 terms.
TensorElement reduced_coproduct_sh(const Composition& c);

/// Δ^{(m−1)} = (Δ ⊗ id^{⊗(m−2)}) ∘ Δ^{(m−2)}; rank-m output. Throws
/// DomainError for m = 0.
TensorElement iterated_coproduct_sh(std::size_t m, const Element& e);

/// Coefficient of 𝟏.
Rational counit_sh(const Element& e);

/// Convolution inverse of id, by the reduced-coproduct recursion
/// S(x) = −x − Σ S(x′)⧢x″. Memoized per basis element.
Element antipode_sh(const Composition& c);
Element antipode_sh(const Element& e);

} // namespace hopfmzv
