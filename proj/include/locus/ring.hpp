#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "locus/scalar.hpp"

namespace locus {

/// A polynomial ring descriptor: a coefficient field and an ordered list of
/// variables.  Variables are identified by position; names are display-only.
/// Two descriptors are interchangeable when field and variable count agree.
class Ring {
public:
    Ring(Field field, std::vector<std::string> vars)
        : field_(field), vars_(std::move(vars)) {}

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& var_names() const { return vars_; }

    /// Position of a named variable, or npos.
    std::size_t var_index(const std::string& name) const;

    bool compatible(const Ring& o) const {
        return field_ == o.field_ && vars_.size() == o.vars_.size();
    }

    std::string to_string() const; // e.g. "Q[x,y]"

private:
    Field field_;
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars);

/// Exponent vector; length always equals the ring's variable count.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);       // a | b componentwise
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires divides(b, a)
Monomial mono_lcm(const Monomial& a, const Monomial& b);

/// A total order on monomials refining divisibility.  Block orders compare an
/// eliminated variable block first (so elimination ideals drop out of a basis).
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    /// Eliminates the variables whose mask bit is set.
    static MonomialOrder block(std::vector<bool> eliminated);
    /// Eliminates the first `split` variables.
    static MonomialOrder block_split(std::size_t split, std::size_t nvars);

    Kind kind() const { return kind_; }
    const std::vector<bool>& mask() const { return mask_; }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && mask_ == o.mask_; }

    std::string to_string() const;

private:
    MonomialOrder(Kind k, std::vector<bool> mask) : kind_(k), mask_(std::move(mask)) {}

    Kind kind_;
    std::vector<bool> mask_; // Block only
};

} // namespace locus
