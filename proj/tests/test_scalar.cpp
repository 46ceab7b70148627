#include <doctest.h>

#include "locus/scalar.hpp"
#include "testutil.hpp"

using namespace locus;

TEST_CASE("rational arithmetic is exact and canonical") {
    Field Q = Field::rationals();
    Scalar half = Scalar::rational(1, 2);
    Scalar third = Scalar::rational(1, 3);
    CHECK((half + third).to_string() == "5/6");
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(-2, -4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(0, 7) == Scalar::zero(Q));
    CHECK(Scalar::rational(3, -7).to_string() == "-3/7");
}

TEST_CASE("prime field inverse") {
    Field F5 = Field::prime(5);
    CHECK(Scalar::prime_element(F5, 2).inv() == Scalar::prime_element(F5, 3));
    CHECK(Scalar::prime_element(F5, 2) * Scalar::prime_element(F5, 3) == Scalar::one(F5));
}

TEST_CASE("field construction rejects composites") {
    CHECK_THROWS_AS(Field::prime(6), UsageError);
    CHECK_THROWS_AS(Field::prime(1), UsageError);
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(1000003));
}

TEST_CASE("division by zero and mixed fields are explicit errors") {
    Field Q = Field::rationals();
    Field F3 = Field::prime(3);
    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), ArithmeticError);
    CHECK_THROWS_AS(Scalar::zero(F3).inv(), ArithmeticError);
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F3), UsageError);
}

TEST_CASE("inverse law on random nonzero pairs") {
    testutil::Rng rng(20240801);
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(31)}) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = rng.nonzero_scalar(f);
            Scalar b = rng.nonzero_scalar(f);
            CHECK((a / b) * (b / a) == Scalar::one(f));
        }
    }
}

TEST_CASE("field axioms on randomized triples") {
    testutil::Rng rng(7);
    // 10^4 triples split over the fields in play
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(97)}) {
        for (int i = 0; i < 2500; ++i) {
            Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(f));
        }
    }
}

TEST_CASE("parse and print round-trip") {
    Field Q = Field::rationals();
    Field F7 = Field::prime(7);
    CHECK(Scalar::parse(Q, "-3/7").to_string() == "-3/7");
    CHECK(Scalar::parse(Q, "42").to_string() == "42");
    CHECK(Scalar::parse(F7, "7:3").to_string() == "3");
    CHECK(Scalar::parse(F7, "-1").to_string() == "6");
    CHECK_THROWS_AS(Scalar::parse(F7, "5:3"), UsageError);   // wrong characteristic
    CHECK_THROWS_AS(Scalar::parse(F7, "1/2"), UsageError);   // fraction in a prime field
}
