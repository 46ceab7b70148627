#include "locus/ring.hpp"

#include <algorithm>

namespace locus {

std::size_t Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return static_cast<std::size_t>(-1);
}

std::string Ring::to_string() const {
    std::string s = field_.to_string() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

RingPtr make_ring(Field field, std::vector<std::string> vars) {
    return std::make_shared<Ring>(field, std::move(vars));
}

std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

MonomialOrder MonomialOrder::block(std::vector<bool> eliminated) {
    return MonomialOrder(Kind::Block, std::move(eliminated));
}

MonomialOrder MonomialOrder::block_split(std::size_t split, std::size_t nvars) {
    std::vector<bool> mask(nvars, false);
    for (std::size_t i = 0; i < split && i < nvars; ++i) mask[i] = true;
    return MonomialOrder(Kind::Block, std::move(mask));
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

// Degree first, then the LAST differing exponent decides reversed.
int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                       const std::vector<bool>* mask, bool in_mask) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask && (*mask)[i] != in_mask) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (mask && (*mask)[i] != in_mask) continue;
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::Lex:
        return cmp_lex(a, b);
    case Kind::Grevlex:
        return cmp_grevlex_masked(a, b, nullptr, false);
    case Kind::Block: {
        int c = cmp_grevlex_masked(a, b, &mask_, true);
        if (c) return c;
        return cmp_grevlex_masked(a, b, &mask_, false);
    }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: {
        std::string s = "block[";
        for (bool b : mask_) s += b ? '1' : '0';
        return s + "]";
    }
    }
    return "?";
}

} // namespace locus
