#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riemcurv/rational.hpp"

using namespace riemcurv;

TEST_CASE("factorial") {
    CHECK(factorial(0) == Rat(1));
    CHECK(factorial(5) == Rat(120));
    CHECK(factorial(10) == Rat(3628800));
}

TEST_CASE("double factorial with conventions") {
    CHECK(double_factorial(-1) == Rat(1));
    CHECK(double_factorial(0) == Rat(1));
    CHECK(double_factorial(5) == Rat(15));
    CHECK(double_factorial(6) == Rat(48));
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(gen_binomial(HalfInt::halves(3), 1) == make_rat(3, 2));
    CHECK(gen_binomial(HalfInt::halves(5), 2) == make_rat(15, 8));
    // empty product
    CHECK(gen_binomial(HalfInt::halves(7), 0) == Rat(1));
    CHECK(gen_binomial(HalfInt::whole(-3), 0) == Rat(1));
    CHECK(gen_binomial(HalfInt::halves(-1), 0) == Rat(1));
}

TEST_CASE("generalized binomial agrees with the integer one") {
    for (long n = 0; n <= 9; ++n)
        for (unsigned long j = 0; j <= static_cast<unsigned long>(n); ++j)
            CHECK(gen_binomial(HalfInt::whole(n), j) == binom(n, j));
    // and vanishes past the top for integer arguments
    CHECK(gen_binomial(HalfInt::whole(4), 5) == Rat(0));
}

TEST_CASE("negative binomial expansion coefficients") {
    // (1-x)^-(k+1) has coefficients binom(k+j, j)
    for (long k = 0; k <= 5; ++k)
        for (unsigned long j = 0; j <= 6; ++j) {
            Rat signed_coeff = gen_binomial(HalfInt::whole(-(k + 1)), j);
            if (j % 2 == 1) signed_coeff = -signed_coeff;
            CHECK(signed_coeff == binom(k + j, j));
        }
}

TEST_CASE("rational powers and roots") {
    CHECK(rat_pow(make_rat(2, 3), 3) == make_rat(8, 27));
    CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(rat_pow(Rat(0), 0) == Rat(1));
    CHECK_THROWS_AS(rat_pow(Rat(0), -1), MathDomainError);

    CHECK(rat_sqrt(make_rat(9, 4)) == make_rat(3, 2));
    CHECK(rat_sqrt(Rat(0)) == Rat(0));
    CHECK_FALSE(rat_sqrt(Rat(2)).has_value());
    CHECK_FALSE(rat_sqrt(Rat(-4)).has_value());
}

TEST_CASE("string round trip") {
    CHECK(rat_to_string(make_rat(-3, 8)) == "-3/8");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_from_string("-3/8") == make_rat(-3, 8));
    CHECK(rat_from_string("15/128") == make_rat(15, 128));
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("half integers") {
    HalfInt h = HalfInt::halves(3);
    CHECK_FALSE(h.is_integer());
    CHECK((h + 1).twice() == 5);
    CHECK((-h).twice() == -3);
    CHECK(HalfInt::whole(2).as_integer() == 2);
    CHECK_THROWS_AS(h.as_integer(), std::invalid_argument);
}
