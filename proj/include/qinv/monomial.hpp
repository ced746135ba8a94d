#ifndef QINV_MONOMIAL_HPP
#define QINV_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace qinv {

// Exponent vector of a monomial x1^e1 * x2^e2 * x3^e3. Comparison is graded
// lexicographic: total degree first, then lex on (e1, e2, e3).
struct Monomial {
    std::array<std::uint16_t, 3> e{0, 0, 0};

    unsigned degree() const { return unsigned(e[0]) + e[1] + e[2]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.e <=> b.e;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{{std::uint16_t(a.e[0] + b.e[0]), std::uint16_t(a.e[1] + b.e[1]),
                         std::uint16_t(a.e[2] + b.e[2])}};
    }

    bool divides(const Monomial& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }

    Monomial quotient_by(const Monomial& d) const {
        return Monomial{{std::uint16_t(e[0] - d.e[0]), std::uint16_t(e[1] - d.e[1]),
                         std::uint16_t(e[2] - d.e[2])}};
    }
};

inline Monomial mono(unsigned e1, unsigned e2, unsigned e3) {
    return Monomial{{std::uint16_t(e1), std::uint16_t(e2), std::uint16_t(e3)}};
}

// Largest-first ordering; polynomials store terms leading monomial first.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

// One of the 6 elements of S3 acting on variable indices {0,1,2}.
// image[i] is where variable i is sent, so sigma(x_i) = x_{image[i]}.
struct Permutation {
    std::array<std::uint8_t, 3> image{0, 1, 2};

    Permutation() = default;
    Permutation(unsigned i0, unsigned i1, unsigned i2)
        : image{std::uint8_t(i0), std::uint8_t(i1), std::uint8_t(i2)} {
        if ((1u << i0 | 1u << i1 | 1u << i2) != 0b111u)
            throw std::domain_error("Permutation: images must be a bijection of {0,1,2}");
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

    // (a * b)(i) = a(b(i)): apply b first.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        return Permutation(a.image[b.image[0]], a.image[b.image[1]], a.image[b.image[2]]);
    }

    Monomial apply(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < 3; ++i) r.e[image[i]] = m.e[i];
        return r;
    }

    static Permutation identity() { return {0, 1, 2}; }
    static Permutation s12() { return {1, 0, 2}; }
    static Permutation s13() { return {2, 1, 0}; }
    static Permutation s23() { return {0, 2, 1}; }
    static Permutation cycle123() { return {1, 2, 0}; } // x1->x2->x3->x1
    static Permutation cycle132() { return {2, 0, 1}; }

    // Transposition swapping variables i and j (0-based), i != j.
    static Permutation transposition(unsigned i, unsigned j) {
        if (i == j || i > 2 || j > 2)
            throw std::domain_error("Permutation: invalid transposition");
        Permutation t;
        t.image[i] = std::uint8_t(j);
        t.image[j] = std::uint8_t(i);
        return t;
    }

    static const std::array<Permutation, 6>& all() {
        static const std::array<Permutation, 6> group = {
            identity(), s12(), s13(), s23(), cycle123(), cycle132()};
        return group;
    }

    static const std::array<Permutation, 3>& transpositions() {
        static const std::array<Permutation, 3> ts = {s12(), s13(), s23()};
        return ts;
    }
};

} // namespace qinv

#endif
