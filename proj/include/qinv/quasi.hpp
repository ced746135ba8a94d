#ifndef QINV_QUASI_HPP
#define QINV_QUASI_HPP

#include "qinv/linalg.hpp"
#include "qinv/poly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace qinv {

// The quasi-invariance order parameter m, stored as twice_m so half-integers
// (characteristic 2 only) share the code path. The required divisibility
// exponent is 2m+1 = twice_m + 1.
class QuasiOrder {
public:
    QuasiOrder(unsigned twice_m, unsigned characteristic)
        : twice_m_(twice_m), char_(characteristic) {
        if (twice_m % 2 != 0 && characteristic != 2)
            throw std::domain_error(
                "QuasiOrder: half-integer m is only defined in characteristic 2");
    }

    static QuasiOrder integral(unsigned m, unsigned characteristic) {
        return QuasiOrder(2 * m, characteristic);
    }

    unsigned twice_m() const { return twice_m_; }
    unsigned characteristic() const { return char_; }
    bool is_integral() const { return twice_m_ % 2 == 0; }
    unsigned m_integer() const {
        if (!is_integral()) throw std::domain_error("QuasiOrder: m is a half-integer");
        return twice_m_ / 2;
    }
    unsigned required_exponent() const { return twice_m_ + 1; } // 2m+1
    unsigned top_degree() const { return 3 * twice_m_ + 3; }    // 6m+3

    std::string m_str() const {
        if (is_integral()) return std::to_string(twice_m_ / 2);
        return std::to_string(twice_m_) + "/2";
    }

    friend bool operator==(const QuasiOrder&, const QuasiOrder&) = default;

private:
    unsigned twice_m_;
    unsigned char_;
};

// min over the three transpositions s_ij of valuation_along((1-s_ij)K, i, j);
// nullopt (infinity) iff K is symmetric. Undefined for K = 0.
template <typename C>
std::optional<unsigned> quasi_order(const Polynomial<C>& k) {
    if (k.is_zero()) throw std::domain_error("quasi_order: undefined for the zero polynomial");
    static const std::array<std::pair<unsigned, unsigned>, 3> pairs = {
        {{1, 2}, {1, 3}, {2, 3}}};
    std::optional<unsigned> best;
    for (auto [i, j] : pairs) {
        Polynomial<C> diff = k - apply_permutation(k, Permutation::transposition(i - 1, j - 1));
        auto v = valuation_along(diff, i, j);
        if (!v) continue; // symmetric under this transposition
        if (!best || *v < *best) best = v;
    }
    return best;
}

namespace detail {
inline void check_characteristic(const PolyFp& k, const QuasiOrder& m) {
    if (!k.is_zero() && k.terms().begin()->second.modulus() != m.characteristic())
        throw std::domain_error("polynomial characteristic does not match the quasi-order tag");
}
inline void check_characteristic(const PolyQ&, const QuasiOrder& m) {
    if (m.characteristic() != 0)
        throw std::domain_error("rational polynomial with nonzero characteristic tag");
}
inline void check_characteristic(const PolyZ&, const QuasiOrder&) {}
} // namespace detail

template <typename C>
bool is_m_quasi_invariant(const Polynomial<C>& k, const QuasiOrder& m) {
    if (k.is_zero()) return true;
    detail::check_characteristic(k, m);
    auto q = quasi_order(k);
    return !q || *q >= m.required_exponent();
}

// --- degree-graded monomial indexing (graded-lex descending) ---------------

std::vector<Monomial> monomials_of_degree(unsigned d);
std::size_t monomial_count(unsigned d);                 // C(d+2, 2)
std::size_t monomial_index(const Monomial& m);          // position within its degree
std::vector<std::uint16_t> poly_to_vector(const PolyFp& k, unsigned d);
PolyFp vector_to_poly(const std::vector<std::uint16_t>& v, unsigned d, std::uint64_t p);

// --- symmetric polynomial bookkeeping --------------------------------------

// Exponent triples (a, b, c) with a + 2b + 3c = d, i.e. the monomial basis
// e1^a e2^b e3^c of the degree-d symmetric polynomials. Deterministic order.
std::vector<std::array<unsigned, 3>> symmetric_exponents(unsigned d);
unsigned symmetric_dimension(unsigned d);
PolyFp symmetric_monomial(const std::array<unsigned, 3>& abc, std::uint64_t p);

// --- the oracle -------------------------------------------------------------

// Dimension of the degree-d homogeneous component of Q_m(3, F_p), computed as
// the kernel dimension of the linear system that forces the coefficient of
// u^t in (1 - s_ij)K|_{x_j = x_i + u} to vanish for all t < 2m+1. Memoized.
unsigned dim_component(const QuasiOrder& m, unsigned d);

// Explicit reduced-echelon basis of that kernel (graded-lex largest leading
// monomial first).
std::vector<PolyFp> component_basis(const QuasiOrder& m, unsigned d);

// Basis of the eigenvalue-eigenspace of one transposition inside the degree-d
// component. eigenvalue must be +1 or -1; -1 requires p != 2.
std::vector<PolyFp> eigen_component(const QuasiOrder& m, unsigned d,
                                    const Permutation& transposition, int eigenvalue);

// Decides K = sum_i P_i g_i with every P_i symmetric, returning the P_i when
// they exist. K and all generators must be homogeneous.
struct SpanWitness {
    bool member = false;
    std::vector<PolyFp> coefficients; // one symmetric P_i per generator
};
SpanWitness in_module_span(const PolyFp& k, const std::vector<PolyFp>& gens, std::uint64_t p);

// First (graded order) tuple of symmetric polynomials, not all zero, with
// sum_i P_i g_i = 0, searching total degrees up to max_degree.
struct Relation {
    unsigned degree = 0;
    std::vector<PolyFp> coefficients;
};
std::optional<Relation> find_relation(const std::vector<PolyFp>& gens, std::uint64_t p,
                                      unsigned max_degree);

} // namespace qinv

#endif
