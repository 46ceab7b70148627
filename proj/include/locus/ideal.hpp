#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "locus/polynomial.hpp"

namespace locus {

/// A reduced Groebner basis: monic elements, no head term divides another,
/// tails fully reduced, sorted ascending by head term.  Deterministic for a
/// fixed (generators, order) input.
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> elements;

    bool is_unit() const {
        return elements.size() == 1 && elements[0].is_one();
    }
};

/// Monomials below the head-term staircase of a zero-dimensional ideal.
struct QuotientBasis {
    std::vector<Monomial> staircase; // division-closed, sorted
    std::size_t dimension = 0;
};

/// A finitely generated ideal with a shared per-order basis cache.  Copies
/// share the cache; populated entries are immutable.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
    static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::one(ring)}); }
    static Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const GroebnerBasis& groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

    Polynomial normal_form(const Polynomial& f, const MonomialOrder& ord = MonomialOrder::grevlex()) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
    bool is_unit_ideal() const { return groebner().is_unit(); }
    bool is_zero_ideal() const { return groebner().elements.empty(); }

    /// Staircase basis of ring/ideal, or nullopt when infinite-dimensional.
    std::optional<QuotientBasis> colength() const;

    std::string gens_to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;

    struct CacheBox {
        std::mutex mu;
        std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> entries;
    };
    std::shared_ptr<CacheBox> cache_ = std::make_shared<CacheBox>();
};

/// Full reduction against an arbitrary basis (reduced or not).
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// Buchberger with the product and chain criteria, normal selection strategy
/// (lcm degree, then lcm lexicographically, then pair index).  Returns the
/// reduced basis.  Raises BoundExceeded per global_limits().
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& ord);

bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (a : f), the ideal quotient by a single element.
Ideal ideal_quotient_elem(const Ideal& a, const Polynomial& f);
/// (a : b) = intersection of the element quotients.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

/// Generators of I ∩ k[unmasked variables], kept in the ambient ring.
Ideal eliminate(const Ideal& I, const std::vector<bool>& vars);
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& var_indices);

/// (I : f^∞) via the inverse-adjunction/elimination route (the canonical path).
Ideal saturate(const Ideal& I, const Polynomial& f);
/// (I : f^∞) as the stable limit of the quotient chain (the cross-check oracle).
Ideal saturate_chain(const Ideal& I, const Polynomial& f);

/// All monomials in nvars variables of total degree <= maxdeg, deterministic order.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t maxdeg);

} // namespace locus
