#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qinv/parse.hpp"
#include "qinv/renxu.hpp"

using namespace qinv;

namespace {
const FpRing f3{3};
const QRing qq{};
}

TEST_CASE("X membership: three routes agree") {
    CHECK(!in_X(0));
    CHECK(!in_X(2));
    CHECK(!in_X(6));
    CHECK(in_X(3));
    CHECK(in_X(4));
    CHECK(in_X(5));
    for (unsigned m = 0; m <= 200; ++m) {
        CHECK(in_X(m) == in_X_interval(m));
        CHECK(in_X(m) == conjecture_interval_check(m));
    }
}

TEST_CASE("conjecture inequality evaluations") {
    CHECK(conjecture_interval_check(3));  // a=2, k=0: 6 <= 9 <= 9
    CHECK(!conjecture_interval_check(2));
    CHECK(!conjecture_interval_check(0)); // 3m = 0 forces 3^a <= 0
}

TEST_CASE("characteristic-zero generators P_k") {
    CHECK(char0_generator(0) == parse_poly("x1 - x2", ZRing{}));

    for (unsigned k = 1; k <= 2; ++k) {
        PolyZ pk = char0_generator(k);
        CHECK(pk.degree() == 3 * k + 1);
        // Lemma-3.2-style forced factor: exact valuation 2k+1 along (1,2)
        CHECK(valuation_along(pk, 1, 2) == 2 * k + 1);
        PolyQ pkq;
        for (const auto& [mn, c] : pk.terms()) pkq.add_term(mn, BigRat(c));
        CHECK(quasi_order(pkq) == 2 * k + 1);
        // coprime integer coefficients
        std::vector<BigInt> coeffs;
        for (const auto& [mn, c] : pk.terms()) coeffs.push_back(c);
        CHECK(integer_content(coeffs) == 1);
        // sign convention: positive graded-lex leading coefficient
        CHECK(pk.leading_coefficient() > 0);
        // no nonconstant symmetric divisor among e1, e2, e3
        for (unsigned i = 1; i <= 3; ++i)
            CHECK(!try_divide(pkq, elementary_symmetric(i, qq)).has_value());
    }

    CHECK_THROWS_AS(char0_generator(9), std::domain_error); // beyond budget
}

TEST_CASE("P_k mod 3") {
    CHECK(pk_mod3(0) == parse_poly("x1 + 2*x2", f3));
    CHECK(*quasi_order(pk_mod3(2)) >= 5);
    // Cubing certifies m = 7: degree 21 with quasi-order >= 15
    PolyFp cubed = pow(pk_mod3(2), 3);
    CHECK(cubed.degree() == 21);
    CHECK(*quasi_order(cubed) >= 15);
    CHECK(is_m_quasi_invariant(cubed, QuasiOrder::integral(7, 3)));
}

TEST_CASE("minimal counterexamples") {
    auto m3 = minimal_counterexample(3);
    REQUIRE(m3.has_value());
    CHECK(m3->a == 2);
    CHECK(m3->k == 0);
    CHECK(m3->b == 0);
    CHECK(m3->degree == 9);
    CHECK(m3->polynomial() == pow(difference(1, 2, f3), 9));

    auto m5 = minimal_counterexample(5);
    REQUIRE(m5.has_value());
    CHECK(m5->a == 2);
    CHECK(m5->k == 0);
    CHECK(m5->b == 1);
    CHECK(m5->degree == 15);
    CHECK(m5->polynomial() ==
          pow(difference(1, 2, f3), 9) * vandermonde_power(2, f3));

    CHECK(!minimal_counterexample(2).has_value());
    CHECK(!minimal_counterexample(6).has_value());
    CHECK(!minimal_counterexample(0).has_value());
}

TEST_CASE("counterexample degrees are oracle-minimal") {
    // The spec degree is the first degree where the component grows past the
    // symmetric dimension; below it everything is symmetric.
    for (unsigned m = 1; m <= 7; ++m) {
        QuasiOrder order = QuasiOrder::integral(m, 3);
        auto spec = minimal_counterexample(m);
        unsigned first_nonsym = 3 * m + 1;
        if (spec) {
            CHECK(spec->degree < 3 * m + 1);
            first_nonsym = spec->degree;
        }
        for (unsigned d = 0; d < first_nonsym; ++d)
            CHECK(dim_component(order, d) == symmetric_dimension(d));
        CHECK(dim_component(order, first_nonsym) == symmetric_dimension(first_nonsym) + 2);
    }
}

TEST_CASE("lowest generator degrees reproduce the staircase plot") {
    const unsigned lower[] = {1, 3, 7, 9, 9, 15, 19, 21, 25, 27, 27, 27, 27};
    for (unsigned m = 0; m <= 12; ++m)
        CHECK(lowest_generator_degree(QuasiOrder::integral(m, 3)) == lower[m]);
    CHECK(lowest_generator_degree(QuasiOrder::integral(2, 2)) == 7);
    CHECK_THROWS_AS(lowest_generator_degree(QuasiOrder::integral(1, 5)), std::domain_error);
}

TEST_CASE("characteristic-2 generator degrees") {
    CHECK(char2_degrees(QuasiOrder(0, 2)) == std::pair(1u, 2u));
    CHECK(char2_degrees(QuasiOrder(1, 2)) == std::pair(2u, 4u));
    CHECK(char2_degrees(QuasiOrder(6, 2)) == std::pair(8u, 13u));
    for (unsigned twice_m = 0; twice_m <= 20; ++twice_m) {
        auto [lo, hi] = char2_degrees(QuasiOrder(twice_m, 2));
        CHECK(lo + hi == 3 * twice_m + 3); // always sums to 6m+3
    }
    CHECK_THROWS_AS(char2_degrees(QuasiOrder::integral(1, 3)), std::domain_error);
}

TEST_CASE("staircase structure") {
    StaircaseInfo m4 = staircase_info(4);
    CHECK(m4.t == 2);
    CHECK(m4.d == 2);
    CHECK(m4.phase == StaircasePhase::flat);
    CHECK(m4.degree == 9);
    CHECK(m4.r_m() == pow(difference(1, 2, f3), 9));

    StaircaseInfo m5 = staircase_info(5);
    CHECK(m5.t == 2);
    CHECK(m5.phase == StaircasePhase::climbing);
    CHECK(m5.degree == 15);

    StaircaseInfo m1 = staircase_info(1);
    CHECK(m1.t == 0);
    CHECK(m1.base.a == 1);
    CHECK(m1.d == 1);
    CHECK(m1.phase == StaircasePhase::flat);
    CHECK(m1.degree == 3);

    CHECK_THROWS_AS(staircase_info(2), contract_error);

    // Flat-phase equality and climbing-phase factorization up to m = 12.
    for (unsigned m = 1; m <= 12; ++m) {
        if (!in_X(m)) continue;
        StaircaseInfo info = staircase_info(m);
        auto spec = minimal_counterexample(m);
        REQUIRE(spec.has_value());
        CHECK(info.degree == spec->degree);
        PolyFp rm = info.r_m();
        CHECK(rm.degree() == info.degree);
        CHECK(is_m_quasi_invariant(rm, QuasiOrder::integral(m, 3)));
        if (info.phase == StaircasePhase::flat) {
            CHECK(rm == staircase_info(info.t + 1).r_m());
            CHECK(info.degree == 3 * info.t + 3);
        } else {
            CHECK(rm == staircase_info(info.t + 1).r_m() *
                            vandermonde_power(2 * (m - info.t - info.d), f3));
            CHECK(info.degree == 3 * info.t + 3 + 6 * (m - info.t - info.d));
        }
    }
}

TEST_CASE("remark formula is reported but not trusted") {
    auto r3 = remark_formula(3);
    REQUIRE(r3.has_value());
    CHECK(r3->degree == 9);
    CHECK(r3->agrees_with_search);

    // The known discrepancy: the literal remark disagrees with the search
    // (and with the plotted degree 21) at m = 7.
    auto r7 = remark_formula(7);
    REQUIRE(r7.has_value());
    CHECK(!r7->agrees_with_search);
    CHECK(minimal_counterexample(7)->degree == 21);

    CHECK(!remark_formula(2).has_value());
}
