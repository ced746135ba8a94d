#ifndef QINV_RENXU_HPP
#define QINV_RENXU_HPP

#include "qinv/quasi.hpp"

#include <optional>
#include <utility>

namespace qinv {

// X = { m : Q_m(3, F_3) has a Ren-Xu counterexample } = { m : some base-3
// digit of m equals 1 }.
bool in_X(unsigned m);

// The same set via the fractional-part condition: exists a >= 1 with
// m mod 3^a in [3^{a-1}, 2*3^{a-1} - 1]. Kept separate as a cross-check.
bool in_X_interval(unsigned m);

// Existence of integers a, k >= 0 with (3m+3)/(3k+2) <= 3^a <= 3m/(3k+1)
// (the n = 3, p = 3 specialization of the Ren-Xu inequality).
bool conjecture_interval_check(unsigned m);

// The degree-(3k+1) generator of Q_k(3, Q) in the (-1)-eigenspace of s12,
// normalized to coprime integer coefficients with positive graded-lex leading
// coefficient. Memoized; k beyond the compute budget is refused.
PolyZ char0_generator(unsigned k, unsigned budget = 4);

// Its reduction mod 3; nonzero and k-quasi-invariant over F_3.
PolyFp pk_mod3(unsigned k, unsigned budget = 4);

// The triple (a, k, b) describing P_k^{3^a} prod_{i1<i2}(x_{i1}-x_{i2})^{2b},
// of degree 3^a(3k+1) + 6b.
struct CounterexampleSpec {
    unsigned a = 0;
    unsigned k = 0;
    unsigned b = 0;
    unsigned degree = 0;

    PolyFp polynomial() const;
};

// Minimal-degree Ren-Xu counterexample for Q_m(3, F_3), or nullopt when
// m is not in X. Ties are broken by lexicographically smallest (a, k).
std::optional<CounterexampleSpec> minimal_counterexample(unsigned m);

// Degree of the lowest nonsymmetric generator of Q_m(3, F_p).
//   p = 3: minimal counterexample degree, or 3m+1 when none exists.
//   p = 2: min(2^{a+1}, 6m+3 - 2^{a+1}) with 2^a the largest power of two
//          below 2m+1 (base case twice_m = 0: degree 1).
unsigned lowest_generator_degree(const QuasiOrder& m);

// Both generator degrees of Q_m(3, F_2)_std: (2^{a+1}, 2^a + 3(2m+1-2^a)),
// base case (1, 2). They always sum to 6m+3.
std::pair<unsigned, unsigned> char2_degrees(const QuasiOrder& m);

enum class StaircasePhase { flat, climbing, closed };

// Position of m inside its staircase: t is the largest non-member of X below
// m, base is the spec of R_{t+1}, and d = (3^{a-1}+1)/2 is the half-width.
// R_m = R_{t+1} in the flat phase (t+1 <= m <= t+d) and
// R_m = R_{t+1} prod^{2(m-t-d)} in the climbing phase (t+d < m < t+2d).
struct StaircaseInfo {
    unsigned m = 0;
    unsigned t = 0;
    CounterexampleSpec base; // R_{t+1}, with b = 0
    unsigned d = 0;
    StaircasePhase phase = StaircasePhase::flat;
    unsigned degree = 0; // deg R_m

    PolyFp r_m() const;
};
StaircaseInfo staircase_info(unsigned m);

// Literal transcription of the paper's closed-form recipe for R_m (final
// remark of the counterexample section). Reported next to the search result
// but not trusted; see agrees_with_search.
struct RemarkFormula {
    unsigned a = 0;
    unsigned k = 0;
    unsigned b = 0;
    unsigned degree = 0;
    unsigned complement_degree = 0;
    bool agrees_with_search = false;
};
std::optional<RemarkFormula> remark_formula(unsigned m);

} // namespace qinv

#endif
