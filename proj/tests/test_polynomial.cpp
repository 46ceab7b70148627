#include <doctest.h>

#include "locus/polynomial.hpp"
#include "testutil.hpp"

using namespace locus;

namespace {
RingPtr QXY() { return make_ring(Field::rationals(), {"x", "y"}); }
}

TEST_CASE("product of sum and difference") {
    auto R = QXY();
    Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("exact division") {
    auto R = make_ring(Field::rationals(), {"x"});
    Polynomial x = Polynomial::variable(R, 0);
    Polynomial one = Polynomial::one(R);
    auto q = (x * x - one).exact_div(x - one);
    REQUIRE(q.has_value());
    CHECK(*q == x + one);
    CHECK_FALSE((x * x + one).exact_div(x - one).has_value());
    CHECK_THROWS_AS(x.exact_div(Polynomial::zero(R)), ArithmeticError);
}

TEST_CASE("ring mismatch is a usage error") {
    auto R1 = make_ring(Field::rationals(), {"x"});
    auto R2 = make_ring(Field::prime(3), {"x"});
    CHECK_THROWS_AS(Polynomial::variable(R1, 0) + Polynomial::variable(R2, 0), UsageError);
}

TEST_CASE("monomial orders are total and refine divisibility") {
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                                         MonomialOrder::block_split(1, 3)};
    auto mons = monomials_up_to_degree(3, 4);
    testutil::Rng rng(99);
    for (const auto& ord : orders) {
        for (int i = 0; i < 400; ++i) {
            const Monomial& a = mons[rng.uniform(mons.size())];
            const Monomial& b = mons[rng.uniform(mons.size())];
            const Monomial& c = mons[rng.uniform(mons.size())];
            // totality and antisymmetry
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            CHECK((ord.compare(a, b) == 0) == (a == b));
            // transitivity
            if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0) CHECK(ord.compare(a, c) <= 0);
            // refines divisibility
            if (divides(a, b) && a != b) CHECK(ord.compare(a, b) < 0);
            // compatible with multiplication
            if (ord.compare(a, b) < 0) CHECK(ord.compare(mono_mul(a, c), mono_mul(b, c)) < 0);
        }
    }
}

TEST_CASE("block order eliminates the first block") {
    // any monomial involving an eliminated variable beats any that does not
    MonomialOrder ord = MonomialOrder::block_split(1, 2);
    Monomial x = {1, 0}, y5 = {0, 5};
    CHECK(ord.compare(x, y5) > 0);
}

TEST_CASE("parse matches hand-built polynomials") {
    auto R = make_ring(Field::rationals(), {"x", "y", "z"});
    Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1), z = Polynomial::variable(R, 2);
    Polynomial expect = x * x * y - z.scaled(Scalar::rational(3, 4)) + Polynomial::one(R);
    CHECK(parse_polynomial(R, "x^2*y - 3/4*z + 1") == expect);
    CHECK(parse_polynomial(R, "(x + y)*(x - y)") == x * x - y * y);
    CHECK(parse_polynomial(R, "-x + 2") == Polynomial::constant(R, Scalar::from_int(R->field(), 2)) - x);
}

TEST_CASE("parse reports malformed exponent with position") {
    auto R = make_ring(Field::rationals(), {"x"});
    try {
        parse_polynomial(R, "x^-1");
        FAIL("expected a syntax error");
    } catch (const UsageError& e) {
        std::string msg = e.what();
        CHECK(msg.find("exponent") != std::string::npos);
        CHECK(msg.find("column 3") != std::string::npos);
    }
}

TEST_CASE("print and reparse round-trips on random polynomials") {
    testutil::Rng rng(4242);
    auto R = make_ring(Field::rationals(), {"x", "y", "z"});
    auto R3 = make_ring(Field::prime(3), {"x", "y"});
    for (int i = 0; i < 100; ++i) {
        Polynomial p = rng.poly(R, 4, 6);
        CHECK(parse_polynomial(R, p.to_string()) == p);
        Polynomial q = rng.poly(R3, 4, 6);
        CHECK(parse_polynomial(R3, q.to_string()) == q);
    }
}

TEST_CASE("evaluate and substitute") {
    auto R = QXY();
    Polynomial p = parse_polynomial(R, "x^2*y - 2*x + 1");
    Field Q = Field::rationals();
    CHECK(p.evaluate({Scalar::from_int(Q, 3), Scalar::from_int(Q, 2)}) == Scalar::from_int(Q, 13));
    // substitute x -> t+1, y -> t into Q[t]
    auto T = make_ring(Q, {"t"});
    Polynomial t = Polynomial::variable(T, 0);
    Polynomial image = p.substitute(T, {t + Polynomial::one(T), t});
    CHECK(image == parse_polynomial(T, "t^3 + 2*t^2 - t - 1"));
}

TEST_CASE("univariate gcd") {
    auto R = make_ring(Field::prime(3), {"x"});
    Polynomial a = parse_polynomial(R, "x^2 - 1");
    Polynomial b = parse_polynomial(R, "x^2 + x - 2"); // (x-1)(x+2)
    CHECK(univariate_gcd(a, b, 0) == parse_polynomial(R, "x - 1"));
    CHECK(univariate_gcd(a, Polynomial::one(R), 0).is_one());
}
