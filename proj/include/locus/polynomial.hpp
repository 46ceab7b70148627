#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locus/ring.hpp"

namespace locus {

/// Sparse exact multivariate polynomial.  Terms are stored under a fixed
/// internal order so that arithmetic never depends on the active monomial
/// order; leading-term queries take the order as a parameter.  Zero
/// coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar>; // keyed by exponent vector, lex

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial one(const RingPtr& ring) { return constant(ring, Scalar::one(ring->field())); }
    static Polynomial variable(const RingPtr& ring, std::size_t index, std::uint32_t exp = 1);
    static Polynomial monomial_term(const RingPtr& ring, const Monomial& m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t degree() const; // total degree, 0 for the zero polynomial

    /// Coefficient of a monomial (zero scalar if absent).
    Scalar coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& c); // accumulates, drops zeros

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(std::uint64_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Exact division; nullopt when not divisible.
    std::optional<Polynomial> exact_div(const Polynomial& divisor) const;

    /// Leading term under the given order.  Polynomial must be nonzero.
    const std::pair<const Monomial, Scalar>& leading_term(const MonomialOrder& ord) const;
    Polynomial monic(const MonomialOrder& ord) const;

    /// Terms sorted descending under ord.
    std::vector<std::pair<Monomial, Scalar>> sorted_terms(const MonomialOrder& ord) const;

    /// True when every term has zero exponent at each masked position.
    bool free_of(const std::vector<bool>& vars) const;

    /// Degree in a single variable.
    std::uint32_t degree_in(std::size_t var) const;

    /// Substitute scalars for all variables.
    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Substitute polynomials (in a possibly different ring) for all variables.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    /// Map into a ring with more variables: old variable i becomes position[i].
    Polynomial embed(const RingPtr& target, const std::vector<std::size_t>& position) const;

    /// Inverse of embed: keep[i] gives the source position of target variable i.
    /// Requires the polynomial to be free of all dropped variables.
    Polynomial project(const RingPtr& target, const std::vector<std::size_t>& keep) const;

    /// Rendered like `x^2*y - 3/4*z + 1` (grevlex-descending display order).
    std::string to_string() const;

private:
    void check_ring(const Polynomial& o) const;

    RingPtr ring_;
    TermMap terms_;
};

/// Parses the CLI/text syntax (`x^2*y - 3/4*z + 1`).  Position information in
/// errors is 1-based (line:column).
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Univariate GCD in the variable `var`, monic-normalized; every other
/// variable must be absent from both inputs.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, std::size_t var);

} // namespace locus
