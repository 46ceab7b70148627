#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locus/coord_ring.hpp"

namespace locus {

/// Finitely supported exponent vector over the section indices of a
/// presentation, with the componentwise partial order.
class MultiExponent {
public:
    MultiExponent() = default;
    static MultiExponent unit(std::size_t index, std::uint32_t k = 1);

    std::uint32_t at(std::size_t index) const;
    void set(std::size_t index, std::uint32_t k);
    bool is_zero() const { return e_.empty(); }
    const std::map<std::size_t, std::uint32_t>& entries() const { return e_; }

    bool leq(const MultiExponent& o) const;
    MultiExponent sup(const MultiExponent& o) const;
    MultiExponent operator+(const MultiExponent& o) const;
    MultiExponent minus(const MultiExponent& o) const; // requires o.leq(*this)
    bool operator==(const MultiExponent& o) const { return e_ == o.e_; }

private:
    std::map<std::size_t, std::uint32_t> e_; // index -> positive exponent
};

/// An invertible module over an affine coordinate ring, represented as a
/// fractional ideal (numerator ideal over a common denominator) with a free
/// fast path.  Scaling by the denominator is an isomorphism of modules and
/// the colimit construction only sees the module up to isomorphism, so all
/// internal arithmetic uses the integral numerator ideal; the denominator is
/// carried for display and for membership tests phrased on user input.
class InvertibleModule {
public:
    /// M = R (numerator (1), denominator 1).
    static InvertibleModule trivial(const CoordRing& R);
    /// M = (g), free with stored generator.
    static InvertibleModule free_module(const CoordRing& R, Polynomial generator);
    /// M = N / d.  Verifies invertibility: M * (R : M) = R.
    static InvertibleModule fractional(const CoordRing& R, std::vector<Polynomial> numerator_gens,
                                       Polynomial denominator);

    const CoordRing& base() const { return base_; }
    const Ideal& numerator() const { return numerator_; }
    const Polynomial& denominator() const { return denominator_; }
    bool is_free() const { return free_.has_value(); }
    const Polynomial& free_generator() const;

    /// Does w/denominator lie in the module, i.e. w in the numerator ideal?
    bool contains_numerator(const Polynomial& w) const;

    /// Inverse fractional ideal (R : M), as a module.
    InvertibleModule inverse() const;

    /// Fractional-ideal product.
    static InvertibleModule product(const InvertibleModule& a, const InvertibleModule& b);
    InvertibleModule power(std::uint32_t k) const;

    /// Equality as fractional ideals: d2*N1 = d1*N2.
    static bool equal(const InvertibleModule& a, const InvertibleModule& b);

    std::string to_string() const;

private:
    InvertibleModule(CoordRing base, Ideal num, Polynomial den, std::optional<Polynomial> free_gen)
        : base_(std::move(base)), numerator_(std::move(num)), denominator_(std::move(den)),
          free_(std::move(free_gen)) {}

    CoordRing base_;
    Ideal numerator_;
    Polynomial denominator_;
    std::optional<Polynomial> free_; // generator when principal-by-construction
};

/// The vanishing ideal of a section u (given by its numerator) of a module:
/// u * (R : M) pulled into the base ring.  The section generates the module
/// exactly away from this ideal's locus; for a free module (g) with u = c*g
/// this is (c).
Ideal section_divisor_ideal(const InvertibleModule& M, const Polynomial& section_numerator);

/// A section of an invertible module, stored by its numerator over the
/// module's denominator.  Membership in the module is checked.
struct SectionPair {
    Polynomial section_numerator;
    InvertibleModule module;
};

class FractionPresentation;
using PresentationPtr = std::shared_ptr<const FractionPresentation>;

/// A base ring together with an indexed collection of (section, invertible
/// module) pairs.  The associated ring of fractions is the filtered colimit
/// of the tensor powers of the modules along multiplication by the sections;
/// it is never presented globally — every query reduces to a finite amount
/// of ideal arithmetic over the base.  An empty collection presents the base
/// ring itself; a section that is zero in the base presents the zero ring.
class FractionPresentation : public std::enable_shared_from_this<FractionPresentation> {
public:
    static PresentationPtr make(CoordRing base, std::vector<SectionPair> sections,
                                std::vector<std::string> names = {});

    const CoordRing& base() const { return base_; }
    std::size_t size() const { return sections_.size(); }
    const SectionPair& pair(std::size_t i) const { return sections_.at(i); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::size_t index_of(const std::string& name) const;

    /// True when some section vanishes in the base (or the base is zero).
    bool is_zero_ring() const { return zero_ring_; }

    /// (defining ideal : T^infinity) for T the product of all section
    /// numerators: the kernel of base -> fraction ring, cached.
    const Ideal& saturated_zero() const { return saturated_zero_; }

    /// Product of section numerators to the given exponents, reduced.
    Polynomial section_power_numerator(const MultiExponent& a) const;
    /// Product of module denominators to the given exponents (display only).
    Polynomial denominator_power(const MultiExponent& a) const;

    /// Tensor power of the modules: the fractional-ideal product, with the
    /// principal fast path when every factor is free.
    InvertibleModule tensor_power(const MultiExponent& a) const;

    /// Collapses a finite subset of the collection to the single pair
    /// (product of sections, product of modules); empty subset gives (1, R).
    SectionPair reduce_to_single_pair(const std::vector<std::size_t>& subset) const;

private:
    FractionPresentation(CoordRing base, std::vector<SectionPair> sections, std::vector<std::string> names,
                         bool zero_ring, Ideal satz)
        : base_(std::move(base)), sections_(std::move(sections)), names_(std::move(names)),
          zero_ring_(zero_ring), saturated_zero_(std::move(satz)) {}

    CoordRing base_;
    std::vector<SectionPair> sections_;
    std::vector<std::string> names_;
    bool zero_ring_ = false;
    Ideal saturated_zero_;
};

/// An element x / s^a of the fraction ring: a numerator lying in the a-th
/// tensor power together with the multi-exponent a.
class FractionElement {
public:
    FractionElement() = default;
    /// Validates numerator membership in the tensor power.
    FractionElement(PresentationPtr pres, Polynomial numerator, MultiExponent expo);

    static FractionElement from_base(const PresentationPtr& pres, const Polynomial& f);
    static FractionElement zero(const PresentationPtr& pres);
    static FractionElement one(const PresentationPtr& pres);
    /// The image of the section itself: s_alpha / s^{e_alpha} (equals 1).
    static FractionElement section_over_itself(const PresentationPtr& pres, std::size_t alpha);

    const PresentationPtr& presentation() const { return pres_; }
    const Polynomial& numerator() const { return num_; }
    const MultiExponent& exponent() const { return expo_; }

    std::string to_string() const;

private:
    static FractionElement unchecked(PresentationPtr pres, Polynomial num, MultiExponent expo);

    PresentationPtr pres_;
    Polynomial num_;
    MultiExponent expo_;

    friend FractionElement fraction_add(const FractionElement&, const FractionElement&);
    friend FractionElement fraction_mul(const FractionElement&, const FractionElement&);
};

/// Equality x/s^a = y/s^b: some power of the sections kills the
/// cross-difference, decided by membership in the saturated zero ideal.
bool fraction_eq(const FractionElement& u, const FractionElement& v);

FractionElement fraction_add(const FractionElement& u, const FractionElement& v);
FractionElement fraction_mul(const FractionElement& u, const FractionElement& v);

/// The factorization of a base-ring map through the fraction ring, when it
/// exists.  Evaluation of fraction elements is available on success.
class FractionRingMap {
public:
    Polynomial evaluate(const FractionElement& x) const;
    const RingMap& base_map() const { return phi_; }

private:
    friend struct UniversalFactorization;
    friend UniversalFactorization universal_factorization(const PresentationPtr&, const RingMap&);

    PresentationPtr source_;
    RingMap phi_;
    // per-section inversion data: cofactors c_k and module fraction pairs
    // (q_k, g) with m_k = q_k/g generating (R : N); see evaluate().
    struct SectionInverse {
        std::vector<Polynomial> cofactors;  // in the target ring
        std::vector<Polynomial> q;          // in the source ring
        Polynomial g;                       // in the source ring
    };
    std::vector<SectionInverse> inverses_;

    FractionRingMap(PresentationPtr src, RingMap phi) : source_(std::move(src)), phi_(std::move(phi)) {}
};

struct UniversalFactorization {
    bool factors = false;
    std::optional<std::size_t> failing_index; // first section not invertible
    std::optional<FractionRingMap> map;       // set when factors
};

/// Decides whether a well-defined map out of the base factors through the
/// fraction ring: every section must generate its module after base change,
/// tested via the section divisor ideals.  Returns the (unique) factorization
/// when it exists.
UniversalFactorization universal_factorization(const PresentationPtr& U, const RingMap& phi);

struct ContractionResult {
    Ideal contraction;                         // ideal of the ambient ring (contains the relations)
    bool finite_iso = false;                   // base/I -> fractions/I_U is an isomorphism
    std::vector<std::size_t> non_unit_sections; // sections not invertible mod the contraction
};

/// Contraction of the ideal generated by fraction elements, computed by
/// clearing exponents and saturating along the sections (with the module
/// numerator data entering through the tensor-power chain in the non-free
/// case).  The verdict applies the finiteness criterion: the quotient map is
/// an isomorphism exactly when every section is a unit modulo the contraction.
ContractionResult extend_contract(const PresentationPtr& U, const std::vector<FractionElement>& gens);

/// Pushes a presentation forward along a base-ring map.
PresentationPtr base_change(const PresentationPtr& U, const RingMap& phi);

} // namespace locus
