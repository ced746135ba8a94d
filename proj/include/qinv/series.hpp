#ifndef QINV_SERIES_HPP
#define QINV_SERIES_HPP

#include "qinv/quasi.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qinv {

// Coefficient list of a formal power series truncated below truncation_order.
struct TruncatedSeries {
    std::vector<long long> coefficients;

    unsigned truncation_order() const { return unsigned(coefficients.size()); }
    long long at(unsigned degree) const { return coefficients.at(degree); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

// (sum_g t^deg(g)) / ((1-t)(1-t^2)(1-t^3)), truncated. The division is three
// successive prefix-sum passes, one per factor 1/(1-t^k).
TruncatedSeries series_of_free_module(const std::vector<unsigned>& generator_degrees,
                                      unsigned terms);

// Closed-form Hilbert series of Q_m(3, F_p), p in {2, 3}: numerator degrees
// {0, d, d, 6m+3-d, 6m+3-d, 6m+3} with d the lowest nonsymmetric generator
// degree. For half-integer m (p = 2) this is the tested extension of the
// integer-m statement; callers may flag it as "extended".
TruncatedSeries series_closed_form(const QuasiOrder& m, unsigned terms);

// Characteristic-0 shape: generator degrees {0, 3m+1, 3m+1, 3m+2, 3m+2, 6m+3}.
TruncatedSeries series_char0(unsigned m, unsigned terms);

// Oracle series: coefficient d is dim_component(p, m, d). Refuses terms beyond
// the budget (default 6m+10) rather than silently truncating.
TruncatedSeries series_empirical(const QuasiOrder& m, unsigned terms, unsigned budget = 0);

// Numerator shape of the closed form. d_high is stored separately so that a
// malformed shape can be built as a negative control; well-formed shapes have
// d_low + d_high = 6m+3.
struct HilbertShape {
    unsigned twice_m = 0;
    unsigned p = 0;
    unsigned d_low = 0;
    unsigned d_high = 0;

    std::array<unsigned, 6> numerator_exponents() const {
        unsigned top = 3 * twice_m + 3;
        return {0, d_low, d_low, d_high, d_high, top};
    }

    static HilbertShape from_order(const QuasiOrder& m);
};

// True iff the numerator exponent multiset is symmetric under e -> 6m+3-e.
bool palindrome_check(const HilbertShape& shape);

} // namespace qinv

#endif
