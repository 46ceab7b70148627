#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "locus/errors.hpp"

namespace locus {

/// A coefficient domain: the rationals (characteristic 0) or a prime field.
/// Primality is checked at construction time.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const; // "Q" or "F7"

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element.  Immutable in spirit: all operations return new
/// values.  Rationals are GMP-backed and always canonical (gcd 1, positive
/// denominator); prime-field values live in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long n);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar prime_element(const Field& f, std::uint64_t value);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Prime-field value in [0, p); rationals via the mpq accessor.
    std::uint64_t prime_value() const;
    const mpq_class& rational_value() const;

    /// "5", "-3/7" for rationals; "2" for prime-field values.
    std::string to_string() const;

    /// Accepts "n", "n/d" (rationals) and "p:k" prime-field literals.
    static Scalar parse(const Field& f, const std::string& text);

private:
    Scalar(const Field& f, mpq_class q) : field_(f), v_(std::move(q)) {}
    Scalar(const Field& f, std::uint64_t v) : field_(f), v_(v) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> v_;
};

} // namespace locus
