#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qinv/generators.hpp"
#include "qinv/parse.hpp"
#include "qinv/renxu.hpp"

#include <algorithm>

using namespace qinv;

namespace {
const FpRing f2{2};
const FpRing f3{3};

std::vector<unsigned> entry_degrees(const GeneratorSet& s) {
    std::vector<unsigned> d;
    for (const auto& e : s.entries) d.push_back(e.degree);
    return d;
}

// The free Q_0(3,F_3) generator list from the freeness proposition.
GeneratorSet paper_q0_set() {
    QuasiOrder m0 = QuasiOrder::integral(0, 3);
    std::vector<PolyFp> gens = {
        parse_poly("1", f3),
        parse_poly("x1 - x2", f3),
        parse_poly("x1*x3 - x2*x3", f3),
        parse_poly("x1", f3),
        parse_poly("x1*x2 + x1*x3", f3),
        f_poly(),
    };
    GeneratorSet set{3, m0, {}, gens};
    for (const auto& g : gens)
        set.entries.push_back({g, g.is_zero() ? 0 : g.degree(), ""});
    return set;
}
} // namespace

TEST_CASE("special polynomials") {
    PolyFp e_tt = e_trivtriv_poly();
    // (1 + s) E_triv-triv is the full symmetric sum for every transposition
    for (const auto& s : Permutation::transpositions())
        CHECK(is_symmetric(e_tt + apply_permutation(e_tt, s)));

    // (1 + s23) F = -E (a symmetric multiple of E, Lemma-6.6 style)
    PolyFp f = f_poly();
    PolyFp sym_mult = f + apply_permutation(f, Permutation::s23());
    CHECK(sym_mult == Fp(2, 3) * e_poly());

    // each transposition negates the Vandermonde
    PolyFp delta = vandermonde(f3);
    for (const auto& s : Permutation::transpositions())
        CHECK(apply_permutation(delta, s) == -delta);

    CHECK(special_polys(2).size() == 2);
    CHECK(special_polys(3).size() == 3);
    CHECK_THROWS_AS(special_polys(5), std::domain_error);
}

TEST_CASE("characteristic-2 generator sets") {
    auto set0 = char2_generator_set(QuasiOrder(0, 2));
    CHECK(entry_degrees(set0) == std::vector<unsigned>{0, 3, 1, 2});
    CHECK(set0.entries[2].poly == parse_poly("x1 + x2", f2));
    CHECK(set0.entries[3].poly == parse_poly("x1^2 + x2^2", f2));

    // twice_m = 2 (m=1): G1 = (x1-x2)^4, G2 = (x1-x2)^2 prod^1
    auto set2 = char2_generator_set(QuasiOrder(2, 2));
    CHECK(entry_degrees(set2) == std::vector<unsigned>{0, 9, 4, 5});
    CHECK(set2.entries[2].poly == pow(difference(1, 2, f2), 4));
    CHECK(set2.entries[3].poly ==
          pow(difference(1, 2, f2), 2) * vandermonde_power(1, f2));

    // twice_m = 1 (m=1/2): G1 = (x1-x2)^2, degrees {0, 6, 2, 4}
    auto set1 = char2_generator_set(QuasiOrder(1, 2));
    CHECK(entry_degrees(set1) == std::vector<unsigned>{0, 6, 2, 4});
    CHECK(set1.entries[2].poly == parse_poly("x1^2 + x2^2", f2));

    // module generator degrees match the Hilbert numerator exponent multiset
    auto degrees = set2.module_degrees();
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<unsigned>{0, 4, 4, 5, 5, 9});
}

TEST_CASE("(1+s)G is the odd Vandermonde power") {
    for (unsigned twice_m = 0; twice_m <= 3; ++twice_m) {
        PolyFp g = e_trivtriv_poly() * vandermonde_power(twice_m, f2);
        PolyFp expected = vandermonde_power(twice_m + 1, f2);
        for (const auto& s : Permutation::transpositions())
            CHECK(g + apply_permutation(g, s) == expected);
    }
}

TEST_CASE("Frobenius certificate for the char-2 lowest generator") {
    for (unsigned twice_m = 1; twice_m <= 12; ++twice_m) {
        unsigned pa = 1;
        while (pa * 2 < twice_m + 1) pa *= 2;
        PolyFp g1 = pow(difference(1, 2, f2), 2 * pa);
        PolyFp lhs = g1 - apply_permutation(g1, Permutation::s13());
        CHECK(lhs == pow(difference(1, 3, f2), 2 * pa));
    }
}

TEST_CASE("characteristic-3 generator sets") {
    auto set0 = char3_generator_set(QuasiOrder::integral(0, 3));
    CHECK(entry_degrees(set0) == std::vector<unsigned>{0, 1, 2, 1, 2, 3});

    // the produced set and the paper's Q_0 set generate each other
    auto paper = paper_q0_set();
    for (const auto& e : set0.entries)
        CHECK(in_module_span(e.poly, paper.module_gens, 3).member);
    for (const auto& g : paper.module_gens)
        CHECK(in_module_span(g, set0.module_gens, 3).member);

    auto set1 = char3_generator_set(QuasiOrder::integral(1, 3));
    CHECK(entry_degrees(set1) == std::vector<unsigned>{0, 3, 6, 3, 6, 9});
    // K is the unique monic eigenvector: a scalar multiple of (x1-x2)^3
    CHECK(set1.entries[1].poly == pow(difference(1, 2, f3), 3));

    auto set2 = char3_generator_set(QuasiOrder::integral(2, 3));
    CHECK(entry_degrees(set2) == std::vector<unsigned>{0, 7, 8, 7, 8, 15});

    CHECK_THROWS_AS(char3_generator_set(QuasiOrder::integral(0, 2)), std::domain_error);
}

TEST_CASE("free generation verification") {
    // the paper's six Q_0 generators: success through degree 10
    auto report = verify_free_generation(paper_q0_set(), 10);
    CHECK(report.ok);
    CHECK(report.per_degree.size() == 11);
    for (const auto& row : report.per_degree) {
        CHECK(row.rank == row.dim);
        CHECK(row.rows == row.dim);
    }

    // negative control: {1, x1-x2} misses x1 already in degree 1
    QuasiOrder m0 = QuasiOrder::integral(0, 3);
    GeneratorSet partial{3, m0, {}, {parse_poly("1", f3), parse_poly("x1 - x2", f3)}};
    auto bad = verify_free_generation(partial, 4);
    CHECK(!bad.ok);
    CHECK(bad.failure_degree == 1);
    CHECK(bad.failure.find("not spanned") != std::string::npos);

    // built-in dependence is reported as a relation
    GeneratorSet dependent{
        3, m0, {}, {parse_poly("x1 - x2", f3),
                    elementary_symmetric(1, f3) * parse_poly("x1 - x2", f3)}};
    auto rel = verify_free_generation(dependent, 4);
    CHECK(!rel.ok);
    CHECK(rel.failure.find("relation") != std::string::npos);
    CHECK(rel.failure_degree == 2);
}

TEST_CASE("non-generators are inside the module") {
    for (unsigned m = 1; m <= 2; ++m) {
        auto set = char3_generator_set(QuasiOrder::integral(m, 3));
        const PolyFp& k = set.entries[1].poly;
        const PolyFp& l = set.entries[2].poly;
        const PolyFp& k1 = set.entries[3].poly;
        const PolyFp& l1 = set.entries[4].poly;
        // prod (x_i - x_j)^{2m+1} is generated by K and L
        CHECK(in_module_span(vandermonde_power(2 * m + 1, f3), {k, l}, 3).member);
        // E prod^{2m} is generated by K1 and L1
        CHECK(in_module_span(e_poly() * vandermonde_power(2 * m, f3), {k1, l1}, 3).member);
    }
}

TEST_CASE("classification of the paper examples") {
    Classification tt = classify_module(e_trivtriv_poly());
    CHECK(tt.label == "triv-triv");
    CHECK(tt.dim == 2);
    CHECK(tt.fixed_dim == 1);

    CHECK(classify_module(parse_poly("x1 - x2", f3)).label == "sign-triv");
    CHECK(classify_module(parse_poly("x1", f3)).label == "triv-sign-triv");
    CHECK(classify_module(e_poly()).label == "triv-sign");
    CHECK(classify_module(f_poly()).label == "sign-triv-sign");

    CHECK(classify_module(parse_poly("1", f3)).label == "triv");
    CHECK(classify_module(vandermonde(f3)).label == "sign");
    CHECK(classify_module(parse_poly("x1 + x2", f2)).label == "std");
    CHECK(classify_module(parse_poly("x1", f2)).label == "decomposable{triv,std}");

    // the decomposable control: the orbit of 1 + Delta spans {1, Delta},
    // one triv plus one sign (classification is degree-agnostic)
    PolyFp mixed = parse_poly("1", f3) + vandermonde(f3);
    Classification dec = classify_module(mixed);
    CHECK(dec.label == "decomposable{triv,sign}");
    CHECK(dec.dim == 2);
    CHECK(dec.fixed_dim == 1);
    CHECK(dec.sign_dim == 1);
    // a homogeneous representative of the same module pair
    CHECK(classify_module(pow(elementary_symmetric(1, f3), 3) + vandermonde(f3)).label ==
          "decomposable{triv,sign}");

    // fingerprint outside the table
    CHECK_THROWS_AS(classify_module(parse_poly("x1^2*x2", f2)), std::domain_error);

    // orbit-determined: classify(sigma K) = classify(K)
    for (const auto& sigma : Permutation::all()) {
        CHECK(classify_module(apply_permutation(e_poly(), sigma)).label == "triv-sign");
        CHECK(classify_module(apply_permutation(f_poly(), sigma)).label ==
              "sign-triv-sign");
    }
}

TEST_CASE("generator sets carry their representation labels") {
    auto set2 = char2_generator_set(QuasiOrder(2, 2));
    CHECK(set2.entries[0].rep == "triv");
    CHECK(set2.entries[1].rep == "triv-triv");
    CHECK(set2.entries[2].rep == "std");
    CHECK(set2.entries[3].rep == "std");

    auto set3 = char3_generator_set(QuasiOrder::integral(1, 3));
    CHECK(set3.entries[0].rep == "triv");
    CHECK(set3.entries[1].rep == "sign-triv");
    CHECK(set3.entries[3].rep == "triv-sign-triv");
    CHECK(set3.entries[5].rep == "sign-triv-sign");
}
