#include "hopfmzv/mzv.hpp"

#include "hopfmzv/errors.hpp"
#include "hopfmzv/quasi_shuffle.hpp"
#include "hopfmzv/shuffle.hpp"

#include <cmath>
#include <vector>

namespace hopfmzv {

namespace {

void check_config(const TruncationConfig& cfg) {
    if (cfg.terms < 10)
        throw DomainError("truncation bound must be >= 10, got " + std::to_string(cfg.terms));
}

} // namespace

double zeta_truncated(const Composition& c, const TruncationConfig& cfg) {
    check_config(cfg);
    if (!is_admissible(c))
        throw DivergenceError("multiple zeta series diverges at " + c.to_literal() +
                              " (needs depth >= 1 and first part >= 2)");
    const std::size_t N = cfg.terms;
    // level[n] = Σ over n ≥ m_j > ... > m_k ≥ 1 for the current suffix.
    std::vector<double> level(N + 1, 0.0);
    std::vector<double> next(N + 1, 0.0);
    bool innermost = true;
    for (std::size_t j = c.depth(); j-- > 0;) {
        const double s = c[j];
        next[0] = 0.0;
        for (std::size_t n = 1; n <= N; ++n) {
            const double weight = std::pow(static_cast<double>(n), -s);
            const double inner = innermost ? 1.0 : level[n - 1];
            next[n] = next[n - 1] + weight * inner;
        }
        std::swap(level, next);
        innermost = false;
    }
    return level[N];
}

double eval_element_numeric(const Element& e, const TruncationConfig& cfg) {
    check_config(cfg);
    for (const auto& [c, q] : e)
        if (!c.is_unit() && !is_admissible(c))
            throw DivergenceError("cannot evaluate non-admissible term " + c.to_literal());
    double total = 0.0;
    for (const auto& [c, q] : e)
        total += q.get_d() * (c.is_unit() ? 1.0 : zeta_truncated(c, cfg));
    return total;
}

double double_shuffle_residual(const Composition& s, const Composition& t, const TruncationConfig& cfg) {
    if (!is_admissible(s) || !is_admissible(t))
        throw DivergenceError("double shuffle needs admissible arguments, got " + s.to_literal() + " and " +
                              t.to_literal());
    return std::abs(eval_element_numeric(stuffle(s, t) - shuffle(s, t), cfg));
}

} // namespace hopfmzv
