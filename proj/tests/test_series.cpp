#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qinv/series.hpp"

#include <random>

using namespace qinv;

namespace {

// Independent oracle: coefficient d of t^g / ((1-t)(1-t^2)(1-t^3)) counts the
// triples (a, b, c) with g + a + 2b + 3c = d.
long long count_by_enumeration(const std::vector<unsigned>& gens, unsigned d) {
    long long n = 0;
    for (unsigned g : gens) {
        if (g > d) continue;
        unsigned r = d - g;
        for (unsigned c = 0; 3 * c <= r; ++c)
            for (unsigned b = 0; 2 * b + 3 * c <= r; ++b) ++n;
    }
    return n;
}

} // namespace

TEST_CASE("free module series") {
    TruncatedSeries s = series_of_free_module({0}, 7);
    CHECK(s.coefficients == std::vector<long long>{1, 1, 2, 3, 4, 5, 7});
    for (unsigned d = 0; d < 7; ++d) CHECK(s.at(d) == count_by_enumeration({0}, d));

    CHECK(series_of_free_module({0, 1, 1, 2, 2, 3}, 5).coefficients ==
          std::vector<long long>{1, 3, 6, 10, 15});

    CHECK(series_of_free_module({}, 4).coefficients == std::vector<long long>{0, 0, 0, 0});
    CHECK_THROWS_AS(series_of_free_module({0}, 0), std::domain_error);
}

TEST_CASE("prefix-sum division against enumeration, random generator multisets") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<unsigned> count(1, 6), degree(0, 9);
    for (int i = 0; i < 40; ++i) {
        std::vector<unsigned> gens;
        for (unsigned j = count(rng); j > 0; --j) gens.push_back(degree(rng));
        TruncatedSeries s = series_of_free_module(gens, 14);
        for (unsigned d = 0; d < 14; ++d) CHECK(s.at(d) == count_by_enumeration(gens, d));
    }
}

TEST_CASE("closed form series") {
    CHECK(series_closed_form(QuasiOrder::integral(0, 3), 5).coefficients ==
          std::vector<long long>{1, 3, 6, 10, 15});
    // m=1: counterexample degree 3, coefficient there is p123(3) + 2 = 5
    CHECK(series_closed_form(QuasiOrder::integral(1, 3), 4).coefficients ==
          std::vector<long long>{1, 1, 2, 5});
    // twice_m=1 (m=1/2, p=2): d=2 from the power-of-two degrees
    CHECK(series_closed_form(QuasiOrder(1, 2), 3).coefficients ==
          std::vector<long long>{1, 1, 4});
    CHECK_THROWS_AS(series_closed_form(QuasiOrder::integral(1, 5), 4), std::domain_error);
}

TEST_CASE("characteristic-zero series with a large-prime oracle") {
    TruncatedSeries m0 = series_char0(0, 6);
    CHECK(m0.coefficients == std::vector<long long>{1, 3, 6, 10, 15, 21});

    // Coefficient at degree 4 for m=1: p123(4) + 2 p123(0) = 6. Char-0
    // dimensions are attained over F_p for large p; use p = 5.
    TruncatedSeries m1 = series_char0(1, 10);
    CHECK(m1.at(4) == 6);
    for (unsigned d = 0; d < 10; ++d)
        CHECK(m1.at(d) == dim_component(QuasiOrder::integral(1, 5), d));

    // m=2: all symmetric below degree 3m+1 = 7
    TruncatedSeries m2 = series_char0(2, 7);
    CHECK(m2.coefficients == std::vector<long long>{1, 1, 2, 3, 4, 5, 7});
    for (unsigned d = 0; d < 7; ++d)
        CHECK(m2.at(d) == dim_component(QuasiOrder::integral(2, 5), d));
}

TEST_CASE("empirical series") {
    CHECK(series_empirical(QuasiOrder::integral(0, 3), 6).coefficients ==
          std::vector<long long>{1, 3, 6, 10, 15, 21});
    CHECK(series_empirical(QuasiOrder::integral(1, 3), 10) ==
          series_closed_form(QuasiOrder::integral(1, 3), 10));
    CHECK(series_empirical(QuasiOrder(0, 2), 8) == series_char0(0, 8));

    // budget: default is 6m+10; exceeding it is an explicit refusal
    CHECK_THROWS_AS(series_empirical(QuasiOrder::integral(0, 3), 11), std::domain_error);
    CHECK(series_empirical(QuasiOrder::integral(0, 3), 11, 20).truncation_order() == 11);
}

TEST_CASE("palindromic numerator shapes") {
    HilbertShape m1 = HilbertShape::from_order(QuasiOrder::integral(1, 3));
    CHECK(m1.d_low == 3);
    CHECK(m1.d_high == 6);
    CHECK(palindrome_check(m1)); // exponents 0,3,3,6,6,9

    HilbertShape m0 = HilbertShape::from_order(QuasiOrder::integral(0, 3));
    CHECK(m0.d_low == 1);
    CHECK(palindrome_check(m0)); // numerator 1 + 2t + 2t^2 + t^3

    HilbertShape bad = m1;
    bad.d_high = 5; // malformed: d_high != 6m+3 - d_low
    CHECK(!palindrome_check(bad));
}

TEST_CASE("eventual quadratic growth") {
    for (unsigned m : {1u, 2u}) {
        QuasiOrder order = QuasiOrder::integral(m, 3);
        unsigned top = order.top_degree();
        TruncatedSeries s = series_closed_form(order, top + 7);
        long long prev_diff = -1;
        for (unsigned d = top + 1; d < s.truncation_order(); ++d) {
            long long diff = s.at(d) - s.at(d - 1);
            if (prev_diff >= 0) CHECK(diff >= prev_diff);
            prev_diff = diff;
        }
    }
}

TEST_CASE("series coefficients are nonnegative with constant term 1") {
    for (unsigned twice_m = 0; twice_m <= 6; ++twice_m) {
        QuasiOrder m2(twice_m, 2);
        TruncatedSeries s = series_closed_form(m2, 12);
        CHECK(s.at(0) == 1);
        for (long long c : s.coefficients) CHECK(c >= 0);
        if (twice_m % 2 == 0) {
            QuasiOrder m3(twice_m, 3);
            TruncatedSeries t = series_closed_form(m3, 12);
            CHECK(t.at(0) == 1);
            for (long long c : t.coefficients) CHECK(c >= 0);
        }
    }
}
