#include "locus/scalar.hpp"

#include "locus/limits.hpp"

namespace locus {

Limits& global_limits() {
    static Limits limits;
    return limits;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
    return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t(0));
}

Scalar Scalar::one(const Field& f) {
    return f.is_rational() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t(1));
}

Scalar Scalar::from_int(const Field& f, long n) {
    if (f.is_rational()) return Scalar(f, mpq_class(n));
    std::uint64_t p = f.characteristic();
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("zero denominator in rational");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::prime_element(const Field& f, std::uint64_t value) {
    if (f.is_rational()) throw UsageError("prime_element on the rational field");
    return Scalar(f, value % f.characteristic());
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw UsageError("mixed-field operands: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    std::uint64_t p = field_.characteristic();
    std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return Scalar(field_, s);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    return Scalar(field_, mulmod_u64(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inv();
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
    std::uint64_t a = std::get<std::uint64_t>(v_);
    return Scalar(field_, a == 0 ? 0 : field_.characteristic() - a);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
    // extended Euclid on signed 128-bit intermediates
    std::int64_t a = static_cast<std::int64_t>(std::get<std::uint64_t>(v_));
    std::int64_t m = static_cast<std::int64_t>(field_.characteristic());
    std::int64_t t = 0, newt = 1, r = m, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (t < 0) t += m;
    return Scalar(field_, static_cast<std::uint64_t>(t));
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar r = Scalar::one(field_);
    Scalar b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.is_rational()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

std::uint64_t Scalar::prime_value() const {
    if (field_.is_rational()) throw UsageError("prime_value on a rational");
    return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rational()) throw UsageError("rational_value on a prime-field element");
    return std::get<mpq_class>(v_);
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) {
        const mpq_class& q = std::get<mpq_class>(v_);
        return q.get_str();
    }
    return std::to_string(std::get<std::uint64_t>(v_));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::uint64_t p = std::stoull(text.substr(0, colon));
        std::uint64_t k = std::stoull(text.substr(colon + 1));
        if (f.is_rational() || f.characteristic() != p)
            throw UsageError("prime-field literal " + text + " used in field " + f.to_string());
        return prime_element(f, k);
    }
    auto slash = text.find('/');
    mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
    if (f.is_rational()) {
        mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
        return rational(num, den);
    }
    if (slash != std::string::npos) throw UsageError("fractional literal " + text + " in a prime field");
    mpz_class p(static_cast<unsigned long>(f.characteristic()));
    mpz_class r = ((num % p) + p) % p;
    return prime_element(f, r.get_ui());
}

} // namespace locus
