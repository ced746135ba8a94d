#include "qinv/series.hpp"

#include "qinv/errors.hpp"
#include "qinv/renxu.hpp"

#include <algorithm>
#include <stdexcept>

namespace qinv {

TruncatedSeries series_of_free_module(const std::vector<unsigned>& generator_degrees,
                                      unsigned terms) {
    if (terms < 1) throw std::domain_error("series_of_free_module: need at least one term");
    TruncatedSeries s;
    s.coefficients.assign(terms, 0);
    for (unsigned d : generator_degrees)
        if (d < terms) s.coefficients[d] += 1;
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned d = k; d < terms; ++d) s.coefficients[d] += s.coefficients[d - k];
    return s;
}

TruncatedSeries series_closed_form(const QuasiOrder& m, unsigned terms) {
    if (m.characteristic() != 2 && m.characteristic() != 3)
        throw std::domain_error("series_closed_form: p must be 2 or 3");
    unsigned d = lowest_generator_degree(m);
    unsigned top = m.top_degree();
    return series_of_free_module({0, d, d, top - d, top - d, top}, terms);
}

TruncatedSeries series_char0(unsigned m, unsigned terms) {
    return series_of_free_module(
        {0, 3 * m + 1, 3 * m + 1, 3 * m + 2, 3 * m + 2, 6 * m + 3}, terms);
}

TruncatedSeries series_empirical(const QuasiOrder& m, unsigned terms, unsigned budget) {
    if (budget == 0) budget = 3 * m.twice_m() + 10; // 6m + 10
    if (terms > budget)
        throw std::domain_error("series_empirical: " + std::to_string(terms) +
                                " terms exceed the budget of " + std::to_string(budget) +
                                "; raise the budget explicitly to go further");
    TruncatedSeries s;
    s.coefficients.reserve(terms);
    for (unsigned d = 0; d < terms; ++d)
        s.coefficients.push_back(static_cast<long long>(dim_component(m, d)));
    return s;
}

HilbertShape HilbertShape::from_order(const QuasiOrder& m) {
    HilbertShape shape;
    shape.twice_m = m.twice_m();
    shape.p = m.characteristic();
    shape.d_low = lowest_generator_degree(m);
    shape.d_high = m.top_degree() - shape.d_low;
    if (shape.d_low < 1 || 2 * shape.d_low > m.top_degree())
        throw contract_error("HilbertShape: d_low out of range [1, 3m+1]");
    return shape;
}

bool palindrome_check(const HilbertShape& shape) {
    auto e = shape.numerator_exponents();
    std::sort(e.begin(), e.end());
    unsigned top = 3 * shape.twice_m + 3;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > top) return false;
        if (e[i] + e[e.size() - 1 - i] != top) return false;
    }
    return true;
}

} // namespace qinv
