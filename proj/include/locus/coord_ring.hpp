#pragma once

#include <optional>
#include <vector>

#include "locus/ideal.hpp"

namespace locus {

/// An affine coordinate ring: a polynomial ring modulo a fixed defining ideal
/// (possibly zero).  Elements are polynomials of the ambient ring; arithmetic
/// is normal-form arithmetic modulo a fixed grevlex basis of the defining
/// ideal.  The zero ring (1 in the defining ideal) is a first-class value.
class CoordRing {
public:
    CoordRing() = default;
    explicit CoordRing(RingPtr ambient) : ambient_(ambient), defining_(Ideal::zero(ambient)) {}
    CoordRing(RingPtr ambient, Ideal defining);

    const RingPtr& ambient() const { return ambient_; }
    const Ideal& defining() const { return defining_; }

    bool has_relations() const { return !defining_.gens().empty(); }
    bool is_zero_ring() const { return defining_.is_unit_ideal(); }

    bool compatible(const CoordRing& o) const;

    Polynomial reduce(const Polynomial& f) const { return defining_.normal_form(f); }
    bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
    bool equal(const Polynomial& f, const Polynomial& g) const { return is_zero(f - g); }
    Polynomial mul(const Polynomial& f, const Polynomial& g) const { return reduce(f * g); }

    /// 1 in (f) + defining?
    bool is_unit(const Polynomial& f) const;

    /// The ideal of the ambient ring generated by gens and the relations.
    Ideal lift_ideal(std::vector<Polynomial> gens) const;

    std::string to_string() const;

private:
    RingPtr ambient_;
    Ideal defining_;
};

/// A ring homomorphism between coordinate rings, given by variable images.
/// Well-definedness (relations map to zero) is checked at construction.
class RingMap {
public:
    static RingMap make(CoordRing source, CoordRing target, std::vector<Polynomial> var_images);
    static RingMap identity(const CoordRing& R);

    const CoordRing& source() const { return source_; }
    const CoordRing& target() const { return target_; }
    const std::vector<Polynomial>& var_images() const { return images_; }

    Polynomial apply(const Polynomial& f) const;

private:
    RingMap(CoordRing s, CoordRing t, std::vector<Polynomial> images)
        : source_(std::move(s)), target_(std::move(t)), images_(std::move(images)) {}

    CoordRing source_;
    CoordRing target_;
    std::vector<Polynomial> images_;
};

/// Cofactors c_i with Sum c_i * gens_i = f in R, found by linear algebra over
/// the coefficient field with cofactor degrees up to `maxdeg` (0 = pick
/// automatically and grow within the global degree bound).  nullopt when no
/// representation exists within the bound.
std::optional<std::vector<Polynomial>> express_in_ideal(const Polynomial& f,
                                                        const std::vector<Polynomial>& gens,
                                                        const CoordRing& R, std::uint32_t maxdeg = 0);

/// Exact division in a coordinate ring: w with w * b = a, when it exists.
std::optional<Polynomial> exact_div_mod(const Polynomial& a, const Polynomial& b, const CoordRing& R);

/// Multiplicative inverse in a coordinate ring, when f is a unit.
std::optional<Polynomial> unit_inverse(const Polynomial& f, const CoordRing& R);

} // namespace locus
