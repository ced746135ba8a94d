#ifndef QINV_POLY_HPP
#define QINV_POLY_HPP

#include "qinv/binomial.hpp"
#include "qinv/errors.hpp"
#include "qinv/fp.hpp"
#include "qinv/monomial.hpp"
#include "qinv/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qinv {

// ---------------------------------------------------------------------------
// Coefficient-ring glue. The three rings in play are F_p (runtime modulus),
// arbitrary-precision integers, and rationals.
// ---------------------------------------------------------------------------

inline bool coeff_is_zero(const Fp& c) { return c.is_zero(); }
inline bool coeff_is_zero(const BigInt& c) { return c == 0; }
inline bool coeff_is_zero(const BigRat& c) { return c.is_zero(); }

inline Fp coeff_one_like(const Fp& c) { return Fp(1, c.modulus()); }
inline BigInt coeff_one_like(const BigInt&) { return BigInt(1); }
inline BigRat coeff_one_like(const BigRat&) { return BigRat(1); }

inline Fp coeff_from_bigint(const BigInt& v, const Fp& sample) {
    BigInt r = v % BigInt(sample.modulus());
    if (r < 0) r += BigInt(sample.modulus());
    return Fp(r.convert_to<std::uint64_t>(), sample.modulus());
}
inline BigInt coeff_from_bigint(const BigInt& v, const BigInt&) { return v; }
inline BigRat coeff_from_bigint(const BigInt& v, const BigRat&) { return BigRat(v); }

// Ring descriptors: enough runtime state to mint constants.
struct FpRing {
    std::uint64_t p;
    using coeff_type = Fp;
    Fp from_int(long long v) const { return Fp::from_int(v, p); }
    Fp one() const { return Fp(1, p); }
};
struct ZRing {
    using coeff_type = BigInt;
    BigInt from_int(long long v) const { return BigInt(v); }
    BigInt one() const { return BigInt(1); }
};
struct QRing {
    using coeff_type = BigRat;
    BigRat from_int(long long v) const { return BigRat(v); }
    BigRat one() const { return BigRat(1); }
};

namespace detail {
inline void check_same_ring(const Fp& a, const Fp& b) {
    if (a.modulus() != b.modulus())
        throw std::domain_error("polynomial ring mismatch: F_" + std::to_string(a.modulus()) +
                                " vs F_" + std::to_string(b.modulus()));
}
inline void check_same_ring(const BigInt&, const BigInt&) {}
inline void check_same_ring(const BigRat&, const BigRat&) {}
} // namespace detail

// ---------------------------------------------------------------------------
// Sparse polynomial in x1, x2, x3 in canonical form: no zero coefficient is
// stored, terms ordered graded-lex descending. Two polynomials are equal iff
// their term maps are equal.
// ---------------------------------------------------------------------------
template <typename C>
class Polynomial {
public:
    using coeff_type = C;
    using term_map = std::map<Monomial, C, GradedLexGreater>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial term(const Monomial& m, C c) {
        Polynomial r;
        if (!coeff_is_zero(c)) r.terms_.emplace(m, std::move(c));
        return r;
    }

    static Polynomial variable(unsigned index1, const C& one) {
        if (index1 < 1 || index1 > 3) throw std::domain_error("variable index out of range");
        Monomial m;
        m.e[index1 - 1] = 1;
        return term(m, one);
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; only defined for nonzero polynomials.
    unsigned degree() const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        return terms_.begin()->first.degree();
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        return terms_.begin()->first;
    }
    const C& leading_coefficient() const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        return terms_.begin()->second;
    }

    // Coefficient of a monomial, if present.
    std::optional<C> coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        if (it == terms_.end()) return std::nullopt;
        return it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Polynomial operator*(const C& s, const Polynomial& a) {
        Polynomial r;
        if (coeff_is_zero(s)) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    static void check_rings(const Polynomial& a, const Polynomial& b) {
        if (!a.terms_.empty() && !b.terms_.empty())
            detail::check_same_ring(a.terms_.begin()->second, b.terms_.begin()->second);
    }

    term_map terms_;
};

using PolyFp = Polynomial<Fp>;
using PolyZ = Polynomial<BigInt>;
using PolyQ = Polynomial<BigRat>;

template <typename C>
Polynomial<C> pow(const Polynomial<C>& base, unsigned n) {
    if (base.is_zero()) {
        if (n == 0) throw contract_error("pow: 0^0 with no ring to infer 1 from");
        return Polynomial<C>::zero();
    }
    Polynomial<C> result =
        Polynomial<C>::term(Monomial{}, coeff_one_like(base.terms().begin()->second));
    Polynomial<C> sq = base;
    while (n > 0) {
        if (n & 1) result = result * sq;
        n >>= 1;
        if (n) sq = sq * sq;
    }
    return result;
}

// sigma(K): permutes variable exponents, degree-preserving.
template <typename C>
Polynomial<C> apply_permutation(const Polynomial<C>& k, const Permutation& sigma) {
    Polynomial<C> r;
    for (const auto& [m, c] : k.terms()) r.add_term(sigma.apply(m), c);
    return r;
}

// Invariance under the two generating transpositions implies full symmetry.
template <typename C>
bool is_symmetric(const Polynomial<C>& k) {
    return apply_permutation(k, Permutation::s12()) == k &&
           apply_permutation(k, Permutation::s23()) == k;
}

namespace detail {

inline std::uint64_t binom_in_ring(unsigned n, unsigned t, const Fp& sample) {
    thread_local std::map<std::uint64_t, BinomialTableFp> tables;
    auto it = tables.find(sample.modulus());
    if (it == tables.end() || n >= 512) {
        // tables are built once per modulus, large enough for any exponent here
        unsigned cap = n < 256 ? 511 : n;
        it = tables.insert_or_assign(sample.modulus(), BinomialTableFp(cap, sample.modulus()))
                 .first;
    }
    return (*it).second(n, t);
}

template <typename C>
C binomial_coeff(unsigned n, unsigned t, const C& sample) {
    return coeff_from_bigint(binomial_exact(n, t), sample);
}
inline Fp binomial_coeff(unsigned n, unsigned t, const Fp& sample) {
    return Fp(binom_in_ring(n, t, sample), sample.modulus());
}

} // namespace detail

// Largest r such that (x_i - x_j)^r divides K (variables 1-based), or nullopt
// (infinity) when K = 0. Substitutes x_j = x_i + u and reads the minimal
// u-degree: the coefficient of u^t is sum C(ej, t) c x_i^{ei+ej-t} x_k^{ek}.
template <typename C>
std::optional<unsigned> valuation_along(const Polynomial<C>& k, unsigned i, unsigned j) {
    if (i == j || i < 1 || i > 3 || j < 1 || j > 3)
        throw std::domain_error("valuation_along: need distinct variable indices in {1,2,3}");
    if (k.is_zero()) return std::nullopt;

    unsigned vi = i - 1, vj = j - 1;
    unsigned vk = 3 - vi - vj;

    // Group by (ei + ej, ek); within a group the u^t coefficient at a fixed
    // x_i-power is a single sum over the original ej exponents.
    std::map<std::pair<unsigned, unsigned>, std::vector<std::pair<unsigned, C>>> groups;
    unsigned max_t = 0;
    for (const auto& [m, c] : k.terms()) {
        unsigned s = unsigned(m.e[vi]) + m.e[vj];
        groups[{s, m.e[vk]}].emplace_back(m.e[vj], c);
        if (s > max_t) max_t = s;
    }

    const C& sample = k.terms().begin()->second;
    for (unsigned t = 0; t <= max_t; ++t) {
        for (const auto& [key, entries] : groups) {
            if (key.first < t) continue;
            C sum = sample - sample;
            for (const auto& [ej, c] : entries)
                if (ej >= t) sum = sum + detail::binomial_coeff(ej, t, sample) * c;
            if (!coeff_is_zero(sum)) return t;
        }
    }
    throw contract_error("valuation_along: nonzero polynomial vanished under substitution");
}

// Coefficient-wise reduction Z[x1,x2,x3] -> F_p[x1,x2,x3]; terms reducing to 0
// are dropped.
inline PolyFp reduce_mod_p(const PolyZ& k, std::uint64_t p) {
    PolyFp r;
    for (const auto& [m, c] : k.terms()) r.add_term(m, coeff_from_bigint(c, Fp(0, p)));
    return r;
}

template <typename Ring>
Polynomial<typename Ring::coeff_type> elementary_symmetric(unsigned i, const Ring& ring) {
    using P = Polynomial<typename Ring::coeff_type>;
    P r;
    switch (i) {
        case 1:
            r.add_term(mono(1, 0, 0), ring.one());
            r.add_term(mono(0, 1, 0), ring.one());
            r.add_term(mono(0, 0, 1), ring.one());
            break;
        case 2:
            r.add_term(mono(1, 1, 0), ring.one());
            r.add_term(mono(1, 0, 1), ring.one());
            r.add_term(mono(0, 1, 1), ring.one());
            break;
        case 3:
            r.add_term(mono(1, 1, 1), ring.one());
            break;
        default:
            throw std::domain_error("elementary_symmetric: index must be 1, 2 or 3");
    }
    return r;
}

// x_i - x_j over the given ring, 1-based indices.
template <typename Ring>
Polynomial<typename Ring::coeff_type> difference(unsigned i, unsigned j, const Ring& ring) {
    using P = Polynomial<typename Ring::coeff_type>;
    return P::variable(i, ring.one()) - P::variable(j, ring.one());
}

// (x1-x2)(x1-x3)(x2-x3) over the given ring.
template <typename Ring>
Polynomial<typename Ring::coeff_type> vandermonde(const Ring& ring) {
    return difference(1, 2, ring) * difference(1, 3, ring) * difference(2, 3, ring);
}

// prod_{i1<i2} (x_{i1} - x_{i2})^e.
template <typename Ring>
Polynomial<typename Ring::coeff_type> vandermonde_power(unsigned e, const Ring& ring) {
    return pow(vandermonde(ring), e);
}

// M_d = (x1+x2-2x3)^{2{d/2}} (x1-x3)^{floor(d/2)} (x2-x3)^{floor(d/2)} over F_3.
inline PolyFp m_d_polynomial(unsigned d) {
    FpRing f3{3};
    PolyFp base = pow(difference(1, 3, f3), d / 2) * pow(difference(2, 3, f3), d / 2);
    if (d % 2 == 1) base = base * elementary_symmetric(1, f3); // x1+x2-2x3 = e1 mod 3
    return base;
}

// Exact multivariate division (field coefficients): K / d when the quotient is
// a polynomial, nullopt otherwise.
template <typename C>
std::optional<Polynomial<C>> try_divide(const Polynomial<C>& k, const Polynomial<C>& d) {
    if (d.is_zero()) throw std::domain_error("try_divide: division by zero polynomial");
    Polynomial<C> quotient;
    Polynomial<C> rem = k;
    const Monomial& dm = d.leading_monomial();
    const C& dc = d.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        if (!dm.divides(rm)) return std::nullopt;
        C qc = rem.leading_coefficient() * dc.inverse();
        Monomial qm = rm.quotient_by(dm);
        Polynomial<C> qt = Polynomial<C>::term(qm, qc);
        quotient = quotient + qt;
        rem = rem - qt * d;
    }
    return quotient;
}

template <typename C>
C evaluate(const Polynomial<C>& k, const std::array<C, 3>& x, const C& zero) {
    C acc = zero;
    for (const auto& [m, c] : k.terms()) {
        C t = c;
        for (int v = 0; v < 3; ++v)
            for (unsigned e = 0; e < m.e[v]; ++e) t = t * x[v];
        acc = acc + t;
    }
    return acc;
}

} // namespace qinv

#endif
