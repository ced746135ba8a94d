#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qinv/fp.hpp"
#include "qinv/rational.hpp"

#include <random>

using namespace qinv;

TEST_CASE("prime field inversion") {
    CHECK(ff_inv(Fp(1, 2)).value() == 1);
    CHECK(ff_inv(Fp(2, 3)).value() == 2); // 2*2 = 4 = 1 mod 3

    // Exhaustive oracle for (5 mod 7): the unique y with 5y = 1.
    unsigned expected = 0;
    for (unsigned y = 1; y < 7; ++y)
        if (5 * y % 7 == 1) expected = y;
    CHECK(expected == 3);
    CHECK(ff_inv(Fp(5, 7)).value() == expected);

    CHECK_THROWS_AS(ff_inv(Fp(0, 3)), std::domain_error);
}

TEST_CASE("field axioms, exhaustive for p in {2,3,5}") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                Fp fa(a, p), fb(b, p);
                CHECK(fa + fb == fb + fa);
                CHECK(fa * fb == fb * fa);
                for (std::uint64_t c = 0; c < p; ++c) {
                    Fp fc(c, p);
                    CHECK((fa + fb) + fc == fa + (fb + fc));
                    CHECK((fa * fb) * fc == fa * (fb * fc));
                    CHECK(fa * (fb + fc) == fa * fb + fa * fc);
                }
                if (b != 0) {
                    CHECK(fb * fb.inverse() == Fp(1, p));
                    CHECK(fb.inverse().inverse() == fb);
                }
            }
    }
}

TEST_CASE("reduction and mixing") {
    CHECK(Fp(7, 3).value() == 1);
    CHECK(Fp::from_int(-1, 3).value() == 2);
    CHECK((Fp(1, 2) - Fp(1, 2)).value() == 0);
    CHECK((-Fp(1, 3)).value() == 2);
    CHECK_THROWS_AS(Fp(1, 2) + Fp(1, 3), std::domain_error);
}

TEST_CASE("rational normalization") {
    CHECK(rat_normalize(2, 4) == BigRat(BigInt(1), BigInt(2)));
    CHECK(rat_normalize(-3, -6) == BigRat(BigInt(1), BigInt(2)));
    CHECK(rat_normalize(0, 5).numerator() == 0);
    CHECK(rat_normalize(0, 5).denominator() == 1);
    CHECK(rat_normalize(4, -6).numerator() == -2);
    CHECK(rat_normalize(4, -6).denominator() == 3);
    CHECK_THROWS_AS(rat_normalize(1, 0), std::domain_error);
    CHECK_THROWS_AS(BigRat(3) / BigRat(0), std::domain_error);
}

TEST_CASE("integer content") {
    CHECK(integer_content({6, 9, 12}) == 3);
    CHECK(integer_content({0, 0}) == 0);
    CHECK(integer_content({5, 7}) == 1);
    CHECK(integer_content({}) == 0);
    CHECK(integer_content({-4, 6}) == 2);
}

TEST_CASE("rationals restrict to integer arithmetic") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    for (int i = 0; i < 300; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigRat(a) + BigRat(b) == BigRat(a + b));
        CHECK(BigRat(a) - BigRat(b) == BigRat(a - b));
        CHECK(BigRat(a) * BigRat(b) == BigRat(a * b));
        CHECK((BigRat(a) + BigRat(b)).is_integer());
    }
}
