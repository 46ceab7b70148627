#include <doctest.h>

#include <algorithm>
#include <thread>

#include "locus/gb_cache.hpp"
#include "locus/ideal.hpp"
#include "locus/limits.hpp"
#include "locus/matrix.hpp"
#include "testutil.hpp"

using namespace locus;

namespace {

RingPtr QXY() { return make_ring(Field::rationals(), {"x", "y"}); }

Ideal parse_ideal(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(R, g));
    return Ideal(R, std::move(ps));
}

} // namespace

TEST_CASE("basis examples") {
    auto R = QXY();
    SUBCASE("generators already a basis") {
        Ideal I = parse_ideal(R, {"x^2 - 1", "x*y - y"});
        auto& gb = I.groebner();
        REQUIRE(gb.elements.size() == 2);
        CHECK(gb.elements[0] == parse_polynomial(R, "x*y - y"));
        CHECK(gb.elements[1] == parse_polynomial(R, "x^2 - 1"));
    }
    SUBCASE("principal ideal") {
        Ideal I = parse_ideal(R, {"x"});
        REQUIRE(I.groebner().elements.size() == 1);
        CHECK(I.groebner().elements[0] == parse_polynomial(R, "x"));
    }
    SUBCASE("unit ideal normalizes to (1)") {
        Ideal I = parse_ideal(R, {"1", "x"});
        CHECK(I.is_unit_ideal());
        CHECK(I.groebner().elements.size() == 1);
    }
    SUBCASE("deterministic across repeated computation") {
        Ideal I = parse_ideal(R, {"x^2 + y", "x*y + 1", "y^2 - x"});
        Ideal J = parse_ideal(R, {"x^2 + y", "x*y + 1", "y^2 - x"});
        CHECK(ideal_equal(I, J));
    }
}

TEST_CASE("normal form examples") {
    auto R = make_ring(Field::rationals(), {"x"});
    Ideal I = parse_ideal(R, {"x^2 - 1"});
    CHECK(I.normal_form(parse_polynomial(R, "x^3")) == parse_polynomial(R, "x"));
    CHECK(I.normal_form(parse_polynomial(R, "x^2 - 1")).is_zero());
    CHECK(I.normal_form(Polynomial::one(R)).is_one());
}

TEST_CASE("normal form is idempotent on random inputs") {
    testutil::Rng rng(31);
    auto R = make_ring(Field::prime(3), {"x", "y"});
    for (int i = 0; i < 40; ++i) {
        Ideal I(R, {rng.nonzero_poly(R, 2, 3), rng.nonzero_poly(R, 2, 3)});
        Polynomial f = rng.poly(R, 4, 5);
        Polynomial n1 = I.normal_form(f);
        CHECK(I.normal_form(n1) == n1);
    }
}

TEST_CASE("elimination examples") {
    SUBCASE("inverse adjunction") {
        auto R = make_ring(Field::rationals(), {"t", "x"});
        Ideal I = parse_ideal(R, {"t*x - 1", "x^2 - x"});
        Ideal E = eliminate(I, std::vector<std::size_t>{0});
        CHECK(ideal_equal(E, parse_ideal(R, {"x - 1"})));
    }
    SUBCASE("no relation in the remaining variable") {
        auto R = QXY();
        Ideal E = eliminate(parse_ideal(R, {"x - y"}), std::vector<std::size_t>{0});
        CHECK(E.gens().empty());
    }
    SUBCASE("coordinate ideal") {
        auto R = QXY();
        Ideal E = eliminate(parse_ideal(R, {"x", "y"}), std::vector<std::size_t>{0});
        CHECK(ideal_equal(E, parse_ideal(R, {"y"})));
    }
}

TEST_CASE("saturation examples and the two routes agree") {
    SUBCASE("kills the x factor") {
        auto R = make_ring(Field::rationals(), {"x"});
        Ideal I = parse_ideal(R, {"x^2 - x"});
        Polynomial x = Polynomial::variable(R, 0);
        Ideal S = saturate(I, x);
        CHECK(ideal_equal(S, parse_ideal(R, {"x - 1"})));
        CHECK(ideal_equal(saturate_chain(I, x), S));
    }
    SUBCASE("nonzerodivisor leaves the ideal alone") {
        auto R = QXY();
        Ideal I = parse_ideal(R, {"x"});
        Ideal S = saturate(I, Polynomial::variable(R, 1));
        CHECK(ideal_equal(S, I));
    }
    SUBCASE("monomial case") {
        auto R = QXY();
        Ideal I = parse_ideal(R, {"x*y"});
        Ideal S = saturate(I, Polynomial::variable(R, 0));
        CHECK(ideal_equal(S, parse_ideal(R, {"y"})));
        CHECK(ideal_equal(saturate_chain(I, Polynomial::variable(R, 0)), S));
    }
    SUBCASE("random agreement of elimination and quotient-chain saturation") {
        testutil::Rng rng(77);
        auto R = make_ring(Field::prime(3), {"x", "y"});
        for (int i = 0; i < 25; ++i) {
            Ideal I(R, {rng.nonzero_poly(R, 2, 3), rng.nonzero_poly(R, 2, 3)});
            Polynomial f = rng.nonzero_poly(R, 2, 2);
            CHECK(ideal_equal(saturate(I, f), saturate_chain(I, f)));
        }
    }
}

TEST_CASE("ideal operations") {
    auto R = QXY();
    SUBCASE("intersection of coordinate ideals") {
        Ideal I = ideal_intersect(parse_ideal(R, {"x"}), parse_ideal(R, {"y"}));
        CHECK(ideal_equal(I, parse_ideal(R, {"x*y"})));
    }
    SUBCASE("quotient of powers") {
        Ideal Q = ideal_quotient(parse_ideal(R, {"x^2"}), parse_ideal(R, {"x"}));
        CHECK(ideal_equal(Q, parse_ideal(R, {"x"})));
    }
    SUBCASE("maximal ideal squared on the cubic curve ring") {
        // in Q[x,y] modulo (y^2 - x^3 + x): (x,y)*(x,y) = (x) + relations
        Ideal rel = parse_ideal(R, {"y^2 - x^3 + x"});
        Ideal M = parse_ideal(R, {"x", "y"});
        Ideal M2 = ideal_sum(ideal_product(M, M), rel);
        Ideal target = ideal_sum(parse_ideal(R, {"x"}), rel);
        CHECK(ideal_equal(M2, target));
        // two-sided membership oracle
        CHECK(M2.contains(parse_polynomial(R, "x")));
        CHECK(target.contains(parse_polynomial(R, "x^2")));
        CHECK(target.contains(parse_polynomial(R, "x*y")));
        CHECK(target.contains(parse_polynomial(R, "y^2")));
    }
}

TEST_CASE("colength") {
    auto R = QXY();
    SUBCASE("fat point of dimension 3") {
        Ideal I = parse_ideal(R, {"x^2", "x*y", "y^2"});
        auto qb = I.colength();
        REQUIRE(qb.has_value());
        CHECK(qb->dimension == 3);
        REQUIRE(qb->staircase.size() == 3);
        CHECK(qb->staircase[0] == Monomial{0, 0});
        CHECK(qb->staircase[1] == Monomial{0, 1});
        CHECK(qb->staircase[2] == Monomial{1, 0});
    }
    SUBCASE("single rational point") {
        auto R1 = make_ring(Field::rationals(), {"x"});
        auto qb = parse_ideal(R1, {"x - 3"}).colength();
        REQUIRE(qb.has_value());
        CHECK(qb->dimension == 1);
    }
    SUBCASE("a line has infinite colength") {
        CHECK_FALSE(parse_ideal(R, {"x"}).colength().has_value());
    }
    SUBCASE("staircase is division-closed on random zero-dimensional ideals") {
        testutil::Rng rng(5);
        auto F = make_ring(Field::prime(5), {"x", "y"});
        for (int i = 0; i < 20; ++i) {
            std::vector<Polynomial> gens = {rng.monic_univariate(F, 0, 1 + rng.uniform(3)),
                                            rng.monic_univariate(F, 1, 1 + rng.uniform(3)),
                                            rng.poly(F, 2, 3)};
            Ideal I(F, gens);
            auto qb = I.colength();
            if (!qb) continue; // unit ideal is dimension 0, still fine
            for (const Monomial& m : qb->staircase) {
                for (std::size_t v = 0; v < 2; ++v) {
                    if (m[v] == 0) continue;
                    Monomial less = m;
                    --less[v];
                    CHECK(std::find(qb->staircase.begin(), qb->staircase.end(), less) != qb->staircase.end());
                }
            }
            // dimension equals the number of monomials outside the head ideal
            CHECK(qb->dimension == qb->staircase.size());
        }
    }
}

TEST_CASE("membership agrees with a linear-algebra oracle at low degree") {
    // Row space of monomial multiples of the generators up to total degree 4.
    // Generators are homogeneous so that every member of degree <= 4 has a
    // graded certificate within the oracle's span; for inhomogeneous input
    // the certificate degree can exceed the bound, e.g. z in (x*z+1, x^2).
    testutil::Rng rng(123);
    for (std::uint64_t p : {2ull, 3ull}) {
        auto R = make_ring(Field::prime(p), {"x", "y", "z"});
        auto mons4 = monomials_up_to_degree(3, 4);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Polynomial> gens = {rng.homogeneous_poly(R, 1 + rng.uniform(2), 3),
                                            rng.homogeneous_poly(R, 2, 3)};
            Ideal I(R, gens);
            std::vector<std::vector<Scalar>> rows;
            for (const Polynomial& g : gens) {
                for (const Monomial& m : mons4) {
                    if (total_degree(m) + g.degree() > 4) continue;
                    Polynomial prod = g.mul_term(m, Scalar::one(R->field()));
                    std::vector<Scalar> row(mons4.size(), Scalar::zero(R->field()));
                    for (const auto& [mm, c] : prod.terms())
                        row[std::lower_bound(mons4.begin(), mons4.end(), mm,
                                             [](const Monomial& a, const Monomial& b) {
                                                 auto da = total_degree(a), db = total_degree(b);
                                                 if (da != db) return da < db;
                                                 return a < b;
                                             }) -
                            mons4.begin()] = c;
                    rows.push_back(std::move(row));
                }
            }
            ScalarMatrix mat(rows.size(), mons4.size(), R->field());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < mons4.size(); ++c) mat.at(r, c) = rows[r][c];

            for (int k = 0; k < 6; ++k) {
                // half random, half certified members built inside the bound
                Polynomial f = (k % 2 == 0)
                                   ? rng.poly(R, 2, 4)
                                   : gens[0] * rng.poly(R, 2, 2) + gens[1] * rng.poly(R, 2, 2);
                if (f.degree() > 4) continue;
                std::vector<Scalar> v(mons4.size(), Scalar::zero(R->field()));
                for (const auto& [mm, c] : f.terms())
                    v[std::lower_bound(mons4.begin(), mons4.end(), mm,
                                       [](const Monomial& a, const Monomial& b) {
                                           auto da = total_degree(a), db = total_degree(b);
                                           if (da != db) return da < db;
                                           return a < b;
                                       }) -
                      mons4.begin()] = c;
                CHECK(mat.row_space_contains(v) == I.contains(f));
            }
        }
    }
}

TEST_CASE("bounds raise explicit errors") {
    auto R = QXY();
    SUBCASE("degree bound") {
        Limits tiny;
        tiny.max_total_degree = 3;
        LimitsGuard guard(tiny);
        Ideal I = parse_ideal(R, {"x^4 - y", "y^4 - x"});
        CHECK_THROWS_AS(I.groebner(), BoundExceeded);
    }
    SUBCASE("s-pair bound") {
        Limits tiny;
        tiny.max_spairs = 1;
        LimitsGuard guard(tiny);
        // fresh generators: the process-wide cache would satisfy a repeat query
        Ideal I = parse_ideal(R, {"x^3 + y + 2", "x*y^2 + 5", "y^3 - x - 7"});
        CHECK_THROWS_AS(I.groebner(), BoundExceeded);
    }
}

TEST_CASE("shared cache is concurrency-safe and content-addressed") {
    auto R = QXY();
    std::vector<std::thread> workers;
    std::vector<std::vector<Polynomial>> results(8);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            Ideal I(R, {parse_polynomial(R, "x^2 + y"), parse_polynomial(R, "x*y + 1")});
            results[t] = I.groebner().elements;
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}
