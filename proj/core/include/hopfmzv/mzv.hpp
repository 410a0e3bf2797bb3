#pragma once

#include "hopfmzv/composition.hpp"
#include "hopfmzv/linear.hpp"

#include <cstddef>

namespace hopfmzv {

struct TruncationConfig {
    /// Outer summation bound: n1 ≤ terms. Must be ≥ 10.
    std::size_t terms = 100000;
    double tolerance = 1e-3;
};

/// Σ_{N ≥ n1 > ... > nk ≥ 1} ∏ n_i^{-s_i} by inner-to-outer prefix sums,
/// O(depth·N). Throws DivergenceError unless `c` is admissible.
double zeta_truncated(const Composition& c, const TruncationConfig& cfg = {});

/// Linear extension of zeta_truncated; 𝟏 ↦ 1. Throws DivergenceError naming
/// the first non-admissible term.
double eval_element_numeric(const Element& e, const TruncationConfig& cfg = {});

/// |ζ_N(s∗t) − ζ_N(s⧢t)|.
double double_shuffle_residual(const Composition& s, const Composition& t,
                               const TruncationConfig& cfg = {});

} // namespace hopfmzv
