#pragma once

#include <random>

#include "locus/ideal.hpp"
#include "locus/polynomial.hpp"

namespace locus::testutil {

/// Deterministic generator for the randomized suites; each test fixes a seed
/// so failures reproduce.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t uniform(std::uint64_t n) { return n ? eng_() % n : 0; }
    long range(long lo, long hi) { return lo + static_cast<long>(uniform(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin() { return uniform(2) == 1; }

    Scalar scalar(const Field& f) {
        if (f.is_rational()) {
            long num = range(-9, 9);
            long den = range(1, 9);
            return Scalar::rational(mpz_class(num), mpz_class(den));
        }
        return Scalar::prime_element(f, uniform(f.characteristic()));
    }

    Scalar nonzero_scalar(const Field& f) {
        for (;;) {
            Scalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }

    /// Random polynomial with total degree <= maxdeg and 1..maxterms terms.
    Polynomial poly(const RingPtr& R, std::uint32_t maxdeg, std::size_t maxterms) {
        auto mons = monomials_up_to_degree(R->nvars(), maxdeg);
        Polynomial p(R);
        std::size_t nterms = 1 + uniform(maxterms);
        for (std::size_t i = 0; i < nterms; ++i)
            p.add_term(mons[uniform(mons.size())], scalar(R->field()));
        return p;
    }

    Polynomial nonzero_poly(const RingPtr& R, std::uint32_t maxdeg, std::size_t maxterms) {
        for (;;) {
            Polynomial p = poly(R, maxdeg, maxterms);
            if (!p.is_zero()) return p;
        }
    }

    /// Random nonzero homogeneous polynomial of exact total degree d.
    Polynomial homogeneous_poly(const RingPtr& R, std::uint32_t d, std::size_t maxterms) {
        std::vector<Monomial> mons;
        for (const Monomial& m : monomials_up_to_degree(R->nvars(), d))
            if (total_degree(m) == d) mons.push_back(m);
        for (;;) {
            Polynomial p(R);
            std::size_t nterms = 1 + uniform(maxterms);
            for (std::size_t i = 0; i < nterms; ++i)
                p.add_term(mons[uniform(mons.size())], scalar(R->field()));
            if (!p.is_zero()) return p;
        }
    }

    /// Random monic univariate polynomial of exact degree d in variable var.
    Polynomial monic_univariate(const RingPtr& R, std::size_t var, std::uint32_t d) {
        Polynomial p = Polynomial::variable(R, var, d);
        for (std::uint32_t k = 0; k < d; ++k) {
            Monomial m(R->nvars(), 0);
            m[var] = k;
            p.add_term(m, scalar(R->field()));
        }
        return p;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace locus::testutil
