#include <algorithm>
#include <set>

#include "locus/errors.hpp"
#include "locus/gb_cache.hpp"
#include "locus/ideal.hpp"
#include "locus/limits.hpp"

namespace locus {

namespace {

void check_degree(const Polynomial& p) {
    if (p.degree() > global_limits().max_total_degree)
        throw BoundExceeded("total degree bound " + std::to_string(global_limits().max_total_degree) +
                            " exceeded during reduction");
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t deg;
};

} // namespace

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    Polynomial rem(f.ring());
    Polynomial cur = f;
    while (!cur.is_zero()) {
        check_degree(cur);
        const auto& lt = cur.leading_term(ord);
        bool reduced = false;
        for (const Polynomial& g : basis) {
            const auto& glt = g.leading_term(ord);
            if (divides(glt.first, lt.first)) {
                cur = cur - g.mul_term(mono_div(lt.first, glt.first), lt.second / glt.second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lt.first, lt.second);
            cur.add_term(lt.first, -lt.second);
        }
    }
    return rem;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(ord));

    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pairs = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) pending.emplace(i, n);
    };
    for (std::size_t n = 1; n < basis.size(); ++n) push_pairs(n);

    std::size_t processed = 0;
    while (!pending.empty()) {
        if (++processed > global_limits().max_spairs)
            throw BoundExceeded("S-pair bound " + std::to_string(global_limits().max_spairs) + " exceeded");

        // normal strategy: smallest lcm degree, then lcm lex, then indices
        auto best = pending.end();
        Monomial best_lcm;
        std::uint64_t best_deg = 0;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            Monomial l = mono_lcm(basis[it->first].leading_term(ord).first,
                                  basis[it->second].leading_term(ord).first);
            std::uint64_t d = total_degree(l);
            if (best == pending.end() || d < best_deg || (d == best_deg && l < best_lcm)) {
                best = it;
                best_lcm = l;
                best_deg = d;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        const Monomial& lti = basis[i].leading_term(ord).first;
        const Monomial& ltj = basis[j].leading_term(ord).first;

        // product criterion: coprime head terms reduce to zero
        if (best_lcm == mono_mul(lti, ltj)) continue;

        // chain criterion: some k divides the lcm and both mixed pairs are done
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!divides(basis[k].leading_term(ord).first, best_lcm)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second})) chained = true;
        }
        if (chained) continue;

        Polynomial spoly = basis[i].mul_term(mono_div(best_lcm, lti), Scalar::one(ring->field())) -
                           basis[j].mul_term(mono_div(best_lcm, ltj), Scalar::one(ring->field()));
        Polynomial r = reduce_full(spoly, basis, ord);
        if (!r.is_zero()) {
            basis.push_back(r.monic(ord));
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose head is divisible by another head
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& lti = basis[i].leading_term(ord).first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& ltj = basis[j].leading_term(ord).first;
            if (divides(ltj, lti) && (ltj != lti || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_term(ord).first, b.leading_term(ord).first) < 0;
    });

    GroebnerBasis gb;
    gb.order = ord;
    gb.elements = std::move(reduced);
    return gb;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const Polynomial& g : gens_)
        if (!g.ring()->compatible(*ring_)) throw UsageError("ideal generator from a different ring");
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord) const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        for (const auto& [o, gb] : cache_->entries)
            if (o == ord) return *gb;
    }
    std::shared_ptr<const GroebnerBasis> computed = gb_store().get_or_compute(ring_, gens_, ord);
    std::lock_guard<std::mutex> lk(cache_->mu);
    for (const auto& [o, gb] : cache_->entries)
        if (o == ord) return *gb; // raced: keep the first insert
    cache_->entries.emplace_back(ord, computed);
    return *cache_->entries.back().second;
}

Polynomial Ideal::normal_form(const Polynomial& f, const MonomialOrder& ord) const {
    if (!f.ring()->compatible(*ring_)) throw UsageError("normal_form: ring mismatch");
    const GroebnerBasis& gb = groebner(ord);
    if (gb.elements.empty()) return f;
    return reduce_full(f, gb.elements, ord);
}

std::optional<QuotientBasis> Ideal::colength() const {
    const GroebnerBasis& gb = groebner();
    if (gb.is_unit()) return QuotientBasis{{}, 0};
    std::size_t n = ring_->nvars();
    std::vector<Monomial> heads;
    for (const Polynomial& g : gb.elements) heads.push_back(g.leading_term(gb.order).first);

    // finite dimension needs a pure power of every variable among the heads
    std::vector<std::uint32_t> cap(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const Monomial& h : heads) {
            if (h[v] == 0 || total_degree(h) != h[v]) continue;
            cap[v] = h[v];
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }

    QuotientBasis qb;
    Monomial m(n, 0);
    // enumerate the box under the caps, keep monomials outside the head ideal
    std::size_t v = 0;
    while (true) {
        bool under = true;
        for (const Monomial& h : heads)
            if (divides(h, m)) { under = false; break; }
        if (under) qb.staircase.push_back(m);
        // odometer over the box [0, cap_v)
        for (v = 0;; ++v) {
            if (v == n) break;
            if (++m[v] < cap[v]) break;
            m[v] = 0;
        }
        if (v == n) break;
    }
    std::sort(qb.staircase.begin(), qb.staircase.end());
    qb.dimension = qb.staircase.size();
    return qb;
}

std::string Ideal::gens_to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    const auto& ga = a.groebner().elements;
    const auto& gb = b.groebner().elements;
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring()->compatible(*b.ring())) throw UsageError("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring()->compatible(*b.ring())) throw UsageError("ideal_product: ring mismatch");
    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.gens())
        for (const Polynomial& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

namespace {

/// Ring with one fresh variable prepended; lift/project helpers.
struct ExtendedRing {
    RingPtr ext;
    std::vector<std::size_t> lift_pos;   // old var i -> i+1
    std::vector<std::size_t> keep_pos;   // new var i (in projection) -> i+1
};

ExtendedRing extend_with_tag(const RingPtr& R) {
    std::vector<std::string> names;
    names.push_back("_t");
    for (const auto& v : R->var_names()) names.push_back(v);
    ExtendedRing er;
    er.ext = make_ring(R->field(), std::move(names));
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        er.lift_pos.push_back(i + 1);
        er.keep_pos.push_back(i + 1);
    }
    return er;
}

} // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (!a.ring()->compatible(*b.ring())) throw UsageError("ideal_intersect: ring mismatch");
    const RingPtr& R = a.ring();
    ExtendedRing er = extend_with_tag(R);
    Polynomial t = Polynomial::variable(er.ext, 0);
    Polynomial one_minus_t = Polynomial::one(er.ext) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.gens()) gens.push_back(t * f.embed(er.ext, er.lift_pos));
    for (const Polynomial& g : b.gens()) gens.push_back(one_minus_t * g.embed(er.ext, er.lift_pos));
    Ideal lifted(er.ext, std::move(gens));
    std::vector<bool> mask(er.ext->nvars(), false);
    mask[0] = true;
    Ideal elim = eliminate(lifted, mask);
    std::vector<Polynomial> result;
    for (const Polynomial& g : elim.gens()) result.push_back(g.project(R, er.keep_pos));
    return Ideal(R, std::move(result));
}

Ideal ideal_quotient_elem(const Ideal& a, const Polynomial& f) {
    if (f.is_zero()) return Ideal::unit(a.ring());
    if (f.is_constant()) return a;
    Ideal inter = ideal_intersect(a, Ideal::principal(f));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : inter.gens()) {
        auto q = g.exact_div(f);
        if (!q) throw VerificationFailure("ideal quotient: intersection element not divisible");
        gens.push_back(*q);
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    bool any = false;
    Ideal acc;
    for (const Polynomial& f : b.gens()) {
        if (f.is_zero()) continue;
        Ideal q = ideal_quotient_elem(a, f);
        acc = any ? ideal_intersect(acc, q) : q;
        any = true;
    }
    if (!any) return Ideal::unit(a.ring()); // (a : 0) = (1)
    return acc;
}

Ideal eliminate(const Ideal& I, const std::vector<bool>& vars) {
    if (vars.size() != I.ring()->nvars()) throw UsageError("eliminate: mask arity mismatch");
    MonomialOrder ord = MonomialOrder::block(vars);
    const GroebnerBasis& gb = I.groebner(ord);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elements)
        if (g.free_of(vars)) kept.push_back(g);
    return Ideal(I.ring(), std::move(kept));
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& var_indices) {
    std::vector<bool> mask(I.ring()->nvars(), false);
    for (std::size_t v : var_indices) {
        if (v >= mask.size()) throw UsageError("eliminate: variable index out of range");
        mask[v] = true;
    }
    return eliminate(I, mask);
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw UsageError("saturate: zero multiplier");
    const RingPtr& R = I.ring();
    if (f.is_constant()) return I;
    ExtendedRing er = extend_with_tag(R);
    Polynomial t = Polynomial::variable(er.ext, 0);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens()) gens.push_back(g.embed(er.ext, er.lift_pos));
    gens.push_back(t * f.embed(er.ext, er.lift_pos) - Polynomial::one(er.ext));
    Ideal lifted(er.ext, std::move(gens));
    std::vector<bool> mask(er.ext->nvars(), false);
    mask[0] = true;
    Ideal elim = eliminate(lifted, mask);
    std::vector<Polynomial> result;
    for (const Polynomial& g : elim.gens()) result.push_back(g.project(R, er.keep_pos));
    return Ideal(R, std::move(result));
}

Ideal saturate_chain(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw UsageError("saturate: zero multiplier");
    Ideal cur = I;
    for (std::size_t step = 0; step < global_limits().max_chain_steps; ++step) {
        Ideal nxt = ideal_quotient_elem(cur, f);
        if (ideal_equal(cur, nxt)) return cur;
        cur = nxt;
    }
    throw BoundExceeded("saturation chain did not stabilize within " +
                        std::to_string(global_limits().max_chain_steps) + " steps");
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t maxdeg) {
    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    while (true) {
        if (total_degree(m) <= maxdeg) out.push_back(m);
        std::size_t v = 0;
        for (;; ++v) {
            if (v == nvars) break;
            if (++m[v] <= maxdeg) break;
            m[v] = 0;
        }
        if (v == nvars) break;
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

} // namespace locus
