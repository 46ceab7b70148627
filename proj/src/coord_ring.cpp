#include "locus/coord_ring.hpp"

#include <map>

#include "locus/errors.hpp"
#include "locus/limits.hpp"
#include "locus/matrix.hpp"

namespace locus {

CoordRing::CoordRing(RingPtr ambient, Ideal defining)
    : ambient_(std::move(ambient)), defining_(std::move(defining)) {
    if (!defining_.ring()->compatible(*ambient_))
        throw UsageError("coordinate ring: defining ideal lives in a different ring");
}

bool CoordRing::compatible(const CoordRing& o) const {
    if (!ambient_ || !o.ambient_) return false;
    if (!ambient_->compatible(*o.ambient_)) return false;
    return ideal_equal(defining_, o.defining_);
}

bool CoordRing::is_unit(const Polynomial& f) const {
    std::vector<Polynomial> gens = defining_.gens();
    gens.push_back(f);
    return Ideal(ambient_, std::move(gens)).is_unit_ideal();
}

Ideal CoordRing::lift_ideal(std::vector<Polynomial> gens) const {
    for (const Polynomial& g : defining_.gens()) gens.push_back(g);
    return Ideal(ambient_, std::move(gens));
}

std::string CoordRing::to_string() const {
    if (!has_relations()) return ambient_->to_string();
    return ambient_->to_string() + "/" + defining_.gens_to_string();
}

RingMap RingMap::make(CoordRing source, CoordRing target, std::vector<Polynomial> var_images) {
    if (var_images.size() != source.ambient()->nvars())
        throw UsageError("ring map needs one image per source variable");
    for (const Polynomial& im : var_images)
        if (!im.ring()->compatible(*target.ambient()))
            throw UsageError("ring map image lives in the wrong ring");
    for (const Polynomial& rel : source.defining().gens()) {
        Polynomial image = rel.substitute(target.ambient(), var_images);
        if (!target.is_zero(image))
            throw UsageError("ill-defined ring map: relation " + rel.to_string() + " maps to " +
                             target.reduce(image).to_string());
    }
    return RingMap(std::move(source), std::move(target), std::move(var_images));
}

RingMap RingMap::identity(const CoordRing& R) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < R.ambient()->nvars(); ++i)
        images.push_back(Polynomial::variable(R.ambient(), i));
    return RingMap(R, R, std::move(images));
}

Polynomial RingMap::apply(const Polynomial& f) const {
    if (!f.ring()->compatible(*source_.ambient())) throw UsageError("ring map applied to foreign element");
    return target_.reduce(f.substitute(target_.ambient(), images_));
}

std::optional<std::vector<Polynomial>> express_in_ideal(const Polynomial& f,
                                                        const std::vector<Polynomial>& gens,
                                                        const CoordRing& R, std::uint32_t maxdeg) {
    const RingPtr& A = R.ambient();
    const Field& k = A->field();
    Polynomial target = R.reduce(f);
    if (target.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial::zero(A));

    std::uint32_t lo = maxdeg ? maxdeg : static_cast<std::uint32_t>(target.degree()) + 2;
    std::uint32_t hi = maxdeg ? maxdeg
                              : std::min<std::uint32_t>(static_cast<std::uint32_t>(global_limits().max_total_degree),
                                                        lo + 10);
    for (std::uint32_t D = lo; D <= hi; D = (D == hi ? hi + 1 : std::min<std::uint32_t>(D + 2, hi))) {
        auto mons = monomials_up_to_degree(A->nvars(), D);
        // columns: (gen, monomial) pairs; rows: staircase monomials seen
        std::vector<Polynomial> col_polys;
        col_polys.reserve(gens.size() * mons.size());
        for (const Polynomial& g : gens) {
            Polynomial gr = R.reduce(g);
            for (const Monomial& m : mons)
                col_polys.push_back(R.reduce(gr.mul_term(m, Scalar::one(k))));
        }
        std::map<Monomial, std::size_t> row_of;
        auto touch = [&](const Polynomial& p) {
            for (const auto& [mm, c] : p.terms())
                row_of.emplace(mm, row_of.size());
        };
        for (const Polynomial& p : col_polys) touch(p);
        touch(target);

        ScalarMatrix mat(row_of.size(), col_polys.size(), k);
        for (std::size_t j = 0; j < col_polys.size(); ++j)
            for (const auto& [mm, c] : col_polys[j].terms()) mat.at(row_of[mm], j) = c;
        std::vector<Scalar> rhs(row_of.size(), Scalar::zero(k));
        for (const auto& [mm, c] : target.terms()) rhs[row_of[mm]] = c;

        auto sol = mat.solve(rhs);
        if (sol) {
            std::vector<Polynomial> out;
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Polynomial c(A);
                for (std::size_t mi = 0; mi < mons.size(); ++mi)
                    c.add_term(mons[mi], (*sol)[gi * mons.size() + mi]);
                out.push_back(std::move(c));
            }
            return out;
        }
        if (maxdeg) break;
    }
    return std::nullopt;
}

std::optional<Polynomial> exact_div_mod(const Polynomial& a, const Polynomial& b, const CoordRing& R) {
    if (R.is_zero(b)) {
        if (R.is_zero(a)) return Polynomial::zero(R.ambient());
        throw ArithmeticError("exact_div_mod: division by zero");
    }
    if (!R.has_relations()) {
        auto q = a.exact_div(b);
        return q ? std::optional<Polynomial>(*q) : std::nullopt;
    }
    auto c = express_in_ideal(a, {b}, R);
    if (!c) return std::nullopt;
    return R.reduce((*c)[0]);
}

std::optional<Polynomial> unit_inverse(const Polynomial& f, const CoordRing& R) {
    if (!R.is_unit(f)) return std::nullopt;
    auto c = express_in_ideal(Polynomial::one(R.ambient()), {f}, R);
    if (!c) return std::nullopt;
    return R.reduce((*c)[0]);
}

} // namespace locus
