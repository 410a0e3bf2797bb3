#pragma once

#include "hopfmzv/composition.hpp"
#include "hopfmzv/linear.hpp"
#include "hopfmzv/rational.hpp"

namespace hopfmzv {

// The quasi-shuffle Hopf algebra (H, ∗, 𝟏, Δ_dec, ε). Under M_α ↦ [α] this
// is QSym in the monomial basis.

/// [s1,s']∗[t1,t'] = [s1, s'∗[t1,t']] + [t1, [s1,s']∗t'] + [s1+t1, s'∗t'].
Element stuffle(const Composition& a, const Composition& b);
Element stuffle(const Element& a, const Element& b);

/// Deconcatenation: all depth+1 splits.
TensorElement coproduct_dec(const Composition& c);
TensorElement coproduct_dec(const Element& e);

Rational counit_dec(const Element& e);

/// S(M_α) = (−1)^{depth α} Σ_{β coarsening of reverse(α)} M_β.
Element antipode_qsh(const Composition& c);
Element antipode_qsh(const Element& e);

/// Character 𝟏 ↦ 1, depth-1 ↦ 1, deeper ↦ 0.
Rational zeta_q_prime(const Element& e);

} // namespace hopfmzv
