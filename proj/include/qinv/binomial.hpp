#ifndef QINV_BINOMIAL_HPP
#define QINV_BINOMIAL_HPP

#include "qinv/rational.hpp"

#include <cstdint>
#include <vector>

namespace qinv {

// Pascal triangle mod p. Reducing row by row keeps every entry correct mod p
// even when p divides the exact binomial (no Lucas special-casing needed).
class BinomialTableFp {
public:
    BinomialTableFp(unsigned max_n, std::uint64_t p) : p_(p), rows_(max_n + 1) {
        for (unsigned n = 0; n <= max_n; ++n) {
            rows_[n].assign(n + 1, 1);
            for (unsigned k = 1; k < n; ++k) {
                std::uint64_t s = rows_[n - 1][k - 1] + rows_[n - 1][k];
                rows_[n][k] = s >= p_ ? s - p_ : s;
            }
        }
    }

    // C(n, k) mod p; 0 when k > n.
    std::uint64_t operator()(unsigned n, unsigned k) const {
        if (k > n) return 0;
        return rows_[n][k];
    }

    std::uint64_t modulus() const { return p_; }

private:
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Exact integer binomial, Pascal recursion.
inline BigInt binomial_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace qinv

#endif
