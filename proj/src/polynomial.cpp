#include "locus/polynomial.hpp"

#include <algorithm>

#include "locus/errors.hpp"

namespace locus {

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.emplace(Monomial(ring->nvars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index, std::uint32_t exp) {
    if (index >= ring->nvars()) throw UsageError("variable index out of range");
    Polynomial p(ring);
    Monomial m(ring->nvars(), 0);
    m[index] = exp;
    p.terms_.emplace(std::move(m), Scalar::one(ring->field()));
    return p;
}

Polynomial Polynomial::monomial_term(const RingPtr& ring, const Monomial& m, const Scalar& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 && terms_.begin()->second.is_one();
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_->field()) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->compatible(*o.ring_))
        throw UsageError("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mono_mul(mm, m), k * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(ring_);
    // iterate over the smaller operand
    const Polynomial& a = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& b = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [m, c] : a.terms_)
        for (const auto& [mm, k] : b.terms_) r.add_term(mono_mul(m, mm), c * k);
    return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial r = Polynomial::one(ring_);
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    if (!ring_->compatible(*o.ring_)) return false;
    return terms_ == o.terms_;
}

std::optional<Polynomial> Polynomial::exact_div(const Polynomial& divisor) const {
    check_ring(divisor);
    if (divisor.is_zero()) throw ArithmeticError("division by the zero polynomial");
    static const MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial rem = *this;
    Polynomial quo(ring_);
    const auto& dlt = divisor.leading_term(ord);
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading_term(ord);
        if (!divides(dlt.first, rlt.first)) return std::nullopt;
        Monomial q = mono_div(rlt.first, dlt.first);
        Scalar c = rlt.second / dlt.second;
        quo.add_term(q, c);
        rem = rem - divisor.mul_term(q, c);
    }
    return quo;
}

const std::pair<const Monomial, Scalar>& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.compare(it->first, best->first) > 0) best = it;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(leading_term(ord).second.inv());
}

std::vector<std::pair<Monomial, Scalar>> Polynomial::sorted_terms(const MonomialOrder& ord) const {
    std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
    return v;
}

bool Polynomial::free_of(const std::vector<bool>& vars) const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (vars[i] && m[i] > 0) return false;
    return true;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != ring_->nvars()) throw UsageError("evaluation point has wrong arity");
    Scalar acc = Scalar::zero(ring_->field());
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = t * point[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars()) throw UsageError("substitution image list has wrong arity");
    Polynomial acc(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = t * images[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::embed(const RingPtr& target, const std::vector<std::size_t>& position) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial mm(target->nvars(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) mm[position[i]] = m[i];
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

Polynomial Polynomial::project(const RingPtr& target, const std::vector<std::size_t>& keep) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial mm(target->nvars(), 0);
        std::uint64_t moved = 0;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            mm[i] = m[keep[i]];
            moved += m[keep[i]];
        }
        if (moved != total_degree(m)) throw UsageError("projection drops a variable that occurs");
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    static const MonomialOrder disp = MonomialOrder::grevlex();
    auto ts = sorted_terms(disp);
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) cs = cs.substr(1);
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
    const RingPtr& R = a.ring();
    std::vector<bool> others(R->nvars(), true);
    others[var] = false;
    if (!a.free_of(others) || !b.free_of(others))
        throw UsageError("univariate_gcd: inputs are not univariate in the chosen variable");
    static const MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial f = a, g = b;
    while (!g.is_zero()) {
        // univariate remainder of f by g
        Polynomial r = f;
        std::uint32_t dg = g.degree_in(var);
        const Scalar glc = g.leading_term(ord).second;
        while (!r.is_zero() && r.degree_in(var) >= dg) {
            const auto& lt = r.leading_term(ord);
            Monomial q = lt.first;
            q[var] -= dg;
            r = r - g.mul_term(q, lt.second / glc);
        }
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic(ord);
}

} // namespace locus
